#ifndef SYMPORB_ROOTS_HPP_
#define SYMPORB_ROOTS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symporb/errors.hpp"

namespace symporb {

// Positive roots of C_n.  Diff(i,j) = e_i - e_j, Sum(i,j) = e_i + e_j
// (both with 1 <= i < j <= n), Long(i) = 2e_i.
enum class RootKind { Diff, Sum, Long };

struct Root {
    RootKind kind;
    int i;
    int j;  // unused for Long (kept equal to i)

    static Root diff(int i, int j) {
        if (!(1 <= i && i < j)) throw validation_error("Root::diff needs 1 <= i < j");
        return Root{RootKind::Diff, i, j};
    }
    static Root sum(int i, int j) {
        if (!(1 <= i && i < j)) throw validation_error("Root::sum needs 1 <= i < j");
        return Root{RootKind::Sum, i, j};
    }
    static Root long_root(int i) {
        if (i < 1) throw validation_error("Root::long_root needs i >= 1");
        return Root{RootKind::Long, i, i};
    }

    friend bool operator==(const Root&, const Root&) = default;
};

// col(e_i +- e_j) = col(2e_i) = i
inline int col(const Root& a) { return a.i; }

// row(e_i - e_j) = j, row(e_i + e_j) = -j, row(2e_i) = -i
inline int row(const Root& a) {
    switch (a.kind) {
        case RootKind::Diff: return a.j;
        case RootKind::Sum: return -a.j;
        default: return -a.i;
    }
}

// Mirror order on indices: 1 < 2 < ... < n < -n < ... < -2 < -1.
// The comparison does not depend on n.
inline bool mirror_less(int a, int b) {
    if ((a > 0) != (b > 0)) return a > 0;
    return a < b;
}

// Position of an index in the mirror order, in {0, ..., 2n-1}.
inline int mirror_pos(int n, int idx) { return idx > 0 ? idx - 1 : 2 * n + idx; }

// The two total orders of the root system diagram.  Both are strict;
// roots in smaller-numbered columns are larger.
inline bool prec(const Root& a, const Root& b) {
    if (col(a) != col(b)) return col(b) < col(a);
    return mirror_less(row(b), row(a));
}

inline bool prec_prime(const Root& a, const Root& b) {
    if (col(a) != col(b)) return col(b) < col(a);
    return mirror_less(row(a), row(b));
}

struct PrecLess {
    bool operator()(const Root& a, const Root& b) const { return prec(a, b); }
};
struct PrecPrimeLess {
    bool operator()(const Root& a, const Root& b) const { return prec_prime(a, b); }
};

using RootSet = std::set<Root, PrecPrimeLess>;
template <typename T>
using RootMap = std::map<Root, T, PrecPrimeLess>;

// Expansion in the standard basis of R^n, as integer coordinates.
inline std::vector<int> epsilon_coords(int n, const Root& a) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    switch (a.kind) {
        case RootKind::Diff:
            v[a.i - 1] = 1;
            v[a.j - 1] = -1;
            break;
        case RootKind::Sum:
            v[a.i - 1] = 1;
            v[a.j - 1] = 1;
            break;
        case RootKind::Long:
            v[a.i - 1] = 2;
            break;
    }
    return v;
}

inline int inner_product(int n, const Root& a, const Root& b) {
    auto u = epsilon_coords(n, a);
    auto v = epsilon_coords(n, b);
    int s = 0;
    for (int k = 0; k < n; ++k) s += u[k] * v[k];
    return s;
}

inline bool orthogonal(int n, const Root& a, const Root& b) { return inner_product(n, a, b) == 0; }

// All n^2 positive roots, listed in increasing prec_prime order.
inline std::vector<Root> positive_roots(int n) {
    if (n < 1) throw precondition_error("positive_roots: rank must be >= 1");
    std::vector<Root> out;
    out.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::diff(i, j));
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::sum(i, j));
        out.push_back(Root::long_root(i));
    }
    std::sort(out.begin(), out.end(), prec_prime);
    return out;
}

// Sum of two positive roots, when it is again a positive root.
inline std::optional<Root> root_add(int n, const Root& a, const Root& b) {
    auto u = epsilon_coords(n, a);
    auto v = epsilon_coords(n, b);
    for (int k = 0; k < n; ++k) u[k] += v[k];
    int lo = 0, hi = 0;  // first and second nonzero position (1-based)
    int clo = 0, chi = 0;
    for (int k = 0; k < n; ++k) {
        if (u[k] == 0) continue;
        if (!lo) {
            lo = k + 1;
            clo = u[k];
        } else if (!hi) {
            hi = k + 1;
            chi = u[k];
        } else {
            return std::nullopt;
        }
    }
    if (lo && !hi && clo == 2) return Root::long_root(lo);
    if (lo && hi && clo == 1 && chi == 1) return Root::sum(lo, hi);
    if (lo && hi && clo == 1 && chi == -1) return Root::diff(lo, hi);
    return std::nullopt;
}

// b - a, when it is a positive root.
inline std::optional<Root> root_sub(int n, const Root& b, const Root& a) {
    auto u = epsilon_coords(n, b);
    auto v = epsilon_coords(n, a);
    for (int k = 0; k < n; ++k) u[k] -= v[k];
    int lo = 0, hi = 0, clo = 0, chi = 0;
    for (int k = 0; k < n; ++k) {
        if (u[k] == 0) continue;
        if (!lo) {
            lo = k + 1;
            clo = u[k];
        } else if (!hi) {
            hi = k + 1;
            chi = u[k];
        } else {
            return std::nullopt;
        }
    }
    if (lo && !hi && clo == 2) return Root::long_root(lo);
    if (lo && hi && clo == 1 && chi == 1) return Root::sum(lo, hi);
    if (lo && hi && clo == 1 && chi == -1) return Root::diff(lo, hi);
    return std::nullopt;
}

struct SingularSplit {
    RootSet all;    // S(b):  a with b - a again positive
    RootSet plus;   // S+(b)
    RootSet minus;  // S-(b)
};

// beta-singular roots, computed from the defining property a + c = beta
// by a scan over the positive roots.  S+(2e_i) = { e_i + e_k, i < k <= n },
// otherwise S+(b) = S(b) restricted to the column of b.
inline SingularSplit singular_roots(int n, const Root& beta) {
    SingularSplit s;
    for (const Root& a : positive_roots(n)) {
        if (a == beta) continue;
        if (root_sub(n, beta, a)) s.all.insert(a);
    }
    for (const Root& a : s.all) {
        bool plus;
        if (beta.kind == RootKind::Long)
            plus = (a.kind == RootKind::Sum && a.i == beta.i);
        else
            plus = (col(a) == col(beta));
        if (plus)
            s.plus.insert(a);
        else
            s.minus.insert(a);
    }
    return s;
}

inline bool is_orthogonal_placement(int n, const std::vector<Root>& roots) {
    for (size_t x = 0; x < roots.size(); ++x) {
        for (size_t y = x + 1; y < roots.size(); ++y) {
            if (roots[x] == roots[y]) return false;
            if (!orthogonal(n, roots[x], roots[y])) return false;
            if (row(roots[x]) == row(roots[y])) return false;
            if (col(roots[x]) == col(roots[y])) return false;
        }
    }
    return true;
}

// A set of pairwise orthogonal positive roots with at most one root per
// row and per column.  Stored sorted in increasing prec_prime order.
class RookPlacement {
  public:
    RookPlacement() = default;
    RookPlacement(int n, std::vector<Root> roots) : n_(n), roots_(std::move(roots)) {
        if (!is_orthogonal_placement(n_, roots_))
            throw validation_error("RookPlacement: roots are not an orthogonal rook placement");
        std::sort(roots_.begin(), roots_.end(), prec_prime);
    }

    int rank() const { return n_; }
    const std::vector<Root>& roots() const { return roots_; }
    bool empty() const { return roots_.empty(); }
    size_t size() const { return roots_.size(); }
    bool contains(const Root& a) const {
        return std::find(roots_.begin(), roots_.end(), a) != roots_.end();
    }

    // The prec-largest root; the placement must be nonempty.
    Root leading_root() const {
        if (roots_.empty()) throw precondition_error("leading_root of empty placement");
        return *std::max_element(roots_.begin(), roots_.end(), prec);
    }

    friend bool operator==(const RookPlacement& a, const RookPlacement& b) {
        return a.n_ == b.n_ && a.roots_ == b.roots_;
    }

  private:
    int n_ = 0;
    std::vector<Root> roots_;
};

// Column-by-column inductive set M_D.  Columns of D are processed in
// increasing order; a root of S-(beta) joins M only if neither it nor its
// partner beta - gamma was already taken.
inline RootSet m_set(const RookPlacement& D) {
    const int n = D.rank();
    RootSet m;
    std::vector<Root> by_col = D.roots();
    std::sort(by_col.begin(), by_col.end(),
              [](const Root& a, const Root& b) { return col(a) < col(b); });
    for (const Root& beta : by_col) {
        SingularSplit s = singular_roots(n, beta);
        RootSet fresh;
        for (const Root& g : s.minus) {
            Root partner = *root_sub(n, beta, g);
            if (!m.count(g) && !m.count(partner)) fresh.insert(g);
        }
        m.insert(fresh.begin(), fresh.end());
    }
    return m;
}

// Every orthogonal rook placement of C_n+, the empty one included.
// Ordered by the prec_prime of the largest element, then by cardinality.
inline std::vector<RookPlacement> enumerate_orthogonal_placements(int n) {
    if (n < 1) throw precondition_error("enumerate_orthogonal_placements: rank must be >= 1");
    if (n > 4)
        throw resource_error("enumerate_orthogonal_placements: rank " + std::to_string(n) +
                             " exceeds the supported bound 4");
    const std::vector<Root> phi = positive_roots(n);
    std::vector<std::vector<Root>> found;
    std::vector<Root> cur;
    auto extend = [&](auto&& self, size_t from) -> void {
        found.push_back(cur);
        for (size_t k = from; k < phi.size(); ++k) {
            bool ok = true;
            for (const Root& r : cur) {
                if (!orthogonal(n, r, phi[k]) || row(r) == row(phi[k]) || col(r) == col(phi[k])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(phi[k]);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    std::vector<RookPlacement> out;
    out.reserve(found.size());
    for (auto& roots : found) out.emplace_back(n, std::move(roots));
    std::sort(out.begin(), out.end(), [](const RookPlacement& a, const RookPlacement& b) {
        if (a.empty() || b.empty()) return a.empty() && !b.empty();
        Root la = a.leading_root(), lb = b.leading_root();
        if (!(la == lb)) return prec_prime(la, lb);
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.roots().begin(), a.roots().end(), b.roots().begin(),
                                            b.roots().end(), prec_prime);
    });
    return out;
}

// Compact textual form: "2e1", "e1+e2", "e1-e2".
inline std::string root_name(const Root& a) {
    switch (a.kind) {
        case RootKind::Diff:
            return "e" + std::to_string(a.i) + "-e" + std::to_string(a.j);
        case RootKind::Sum:
            return "e" + std::to_string(a.i) + "+e" + std::to_string(a.j);
        default:
            return "2e" + std::to_string(a.i);
    }
}

inline Root parse_root(const std::string& s) {
    auto bad = [&]() -> Root { throw validation_error("parse_root: cannot parse '" + s + "'"); };
    auto num = [&](size_t b, size_t e) -> int {
        if (b >= e) bad();
        int v = 0;
        for (size_t k = b; k < e; ++k) {
            if (s[k] < '0' || s[k] > '9') bad();
            v = v * 10 + (s[k] - '0');
        }
        return v;
    };
    if (s.size() >= 3 && s[0] == '2' && s[1] == 'e') return Root::long_root(num(2, s.size()));
    if (s.empty() || s[0] != 'e') bad();
    size_t sep = s.find_first_of("+-", 1);
    if (sep == std::string::npos || sep + 1 >= s.size() || s[sep + 1] != 'e') bad();
    int i = num(1, sep);
    int j = num(sep + 2, s.size());
    return s[sep] == '+' ? Root::sum(i, j) : Root::diff(i, j);
}

}  // namespace symporb

#endif
