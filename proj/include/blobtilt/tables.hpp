#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blobtilt/numeric.hpp"

namespace blobtilt {

// dim Delta_n(mu) for the blob algebra: a binomial read off the Pascal rows,
// nonzero for |mu| <= n with mu = n (mod 2).
inline Int blob_standard_dim(long n, long mu) {
    if (mu < -n || mu > n || ((n - mu) % 2) != 0) return Int(0);
    return binomial(n, (n - mu) / 2);
}

// dim of the blob permutation module M_lambda^n (lambda even).
inline Int blob_perm_dim(long n, long lambda) {
    return binomial(2 * n, n + lambda / 2);
}

// TL standard dimension: dim Delta_n(s) = C(n,(n-s)/2) - C(n,(n-s)/2 - 1).
inline Int tl_standard_dim(long n, long s) {
    if (s < 0 || s > n || ((n - s) % 2) != 0) return Int(0);
    return binomial(n, (n - s) / 2) - binomial(n, (n - s) / 2 - 1);
}

/**
 * The standard multiplicities of tensor space:
 *   v(0)=1, v(1)=1, v(-1)=3,
 *   v(n) = 4v(n-1) - v(n-2)  (n >= 2),   v(n) = 4v(n+1) - v(n+2)  (n <= -2).
 * (rho(n) : Delta_n(lambda)) = v(lambda).
 */
inline std::map<long, Int> v_table(long range) {
    if (range < 0) throw std::out_of_range("v_table: range must be >= 0");
    std::map<long, Int> v;
    v[0] = 1;
    if (range >= 1) {
        v[1] = 1;
        v[-1] = 3;
    }
    for (long k = 2; k <= range; ++k) {
        v[k] = 4 * v[k - 1] - v[k - 2];
        v[-k] = 4 * v[-k + 1] - v[-k + 2];
    }
    return v;
}

inline Int v_of(long lambda) {
    long r = lambda < 0 ? -lambda : lambda;
    return v_table(r).at(lambda);
}

/**
 * The rho' analogue: v'(0)=1, v'(1)=v'(-1)=2,
 * v'(l+1) + v'(l-1) = 4 v'(l), symmetric under l -> -l.
 */
inline std::map<long, Int> v_prime_table(long range) {
    if (range < 0) throw std::out_of_range("v_prime_table: range must be >= 0");
    std::map<long, Int> v;
    v[0] = 1;
    if (range >= 1) {
        v[1] = 2;
        v[-1] = 2;
    }
    for (long k = 2; k <= range; ++k) {
        v[k] = 4 * v[k - 1] - v[k - 2];
        v[-k] = v[k];
    }
    return v;
}

/**
 * VmTable: the two-parameter permutation-module multiplicities
 * v_M^lambda(mu) = (M_lambda^n : Delta_n(mu)), stable in n.
 *
 * Seeded from the printed rows mu in {-1, 0, +1, +2} and extended outward
 * in mu by the cross recursion
 *   v^{lambda-2}(mu) + 2 v^lambda(mu) + v^{lambda+2}(mu)
 *       = v^lambda(mu+1) + v^lambda(mu-1),
 * using the symmetry v^lambda = v^{-lambda}.  Rows are filled for
 * mu in [-mu_range, mu_range + 1]; every entry must come out nonnegative.
 */
class VmTable {
public:
    static VmTable build(long lambda_max, long mu_range) {
        if (lambda_max < 2 || mu_range < 2)
            throw std::out_of_range("VmTable: ranges must be >= 2");
        VmTable t;
        t.lambda_max_ = lambda_max;
        t.mu_min_ = -mu_range;
        t.mu_max_ = mu_range + 1;
        // internal lambda grid wide enough that the recursion only ever
        // consumes genuine zeros at the boundary
        t.grid_max_ = std::max(lambda_max, 2 * (mu_range + 2)) + 4;

        // seed rows, zero beyond the printed entries
        t.set(0, 0, 1);
        t.set(0, 1, 1);
        t.set(0, -1, 1);
        t.set(2, -1, 1);
        t.set(0, 2, 1);
        t.set(2, 2, 1);

        for (long mu = -2; mu >= t.mu_min_; --mu)
            for (long l = 0; l <= t.grid_max_ - 2; l += 2)
                t.set(l, mu, t.cross_down(l, mu + 1));
        for (long mu = 3; mu <= t.mu_max_; ++mu)
            for (long l = 0; l <= t.grid_max_ - 2; l += 2)
                t.set(l, mu, t.cross_down(l, mu - 1));
        return t;
    }

    long lambda_max() const { return lambda_max_; }
    long mu_min() const { return mu_min_; }
    long mu_max() const { return mu_max_; }

    // v_M^lambda(mu); symmetric in lambda, zero off the lambda grid.
    Int value(long lambda, long mu) const {
        if (mu < mu_min_ || mu > mu_max_)
            throw std::out_of_range("VmTable: mu outside the populated range");
        if (lambda % 2 != 0) return Int(0);
        long l = lambda < 0 ? -lambda : lambda;
        if (l > grid_max_) return Int(0);
        auto it = values_.find({l, mu});
        return it == values_.end() ? Int(0) : it->second;
    }

    // CSV in the paper's orientation: rows mu, columns lambda descending.
    std::string csv() const {
        std::ostringstream os;
        os << "mu";
        for (long l = lambda_max_; l >= -lambda_max_; l -= 2) os << "," << l;
        os << "\n";
        for (long mu = mu_min_; mu <= mu_max_; ++mu) {
            os << mu;
            for (long l = lambda_max_; l >= -lambda_max_; l -= 2)
                os << "," << value(l, mu).get_str();
            os << "\n";
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (long mu = mu_min_; mu <= mu_max_; ++mu) {
            nlohmann::json row;
            row["mu"] = mu;
            nlohmann::json vals = nlohmann::json::array();
            for (long l = lambda_max_; l >= -lambda_max_; l -= 2)
                vals.push_back(value(l, mu).get_str());
            row["values"] = vals;
            rows.push_back(row);
        }
        nlohmann::json j;
        j["kind"] = "vM";
        j["lambda_descending"] = nlohmann::json::array();
        for (long l = lambda_max_; l >= -lambda_max_; l -= 2)
            j["lambda_descending"].push_back(l);
        j["rows"] = rows;
        return j;
    }

private:
    Int get(long l, long mu) const {
        if (l < 0) l = -l;
        if (l > grid_max_) return Int(0);
        auto it = values_.find({l, mu});
        return it == values_.end() ? Int(0) : it->second;
    }
    void set(long l, long mu, Int v) {
        if (v < 0)
            throw std::logic_error("VmTable: recursion produced a negative entry");
        if (v != 0) values_[{l, mu}] = std::move(v);
    }
    // solve the cross at (l, mu) for the row below (or above, by symmetry
    // of the recursion in mu+1 <-> mu-1): returns
    //   v^{l-2}(mu) + 2 v^l(mu) + v^{l+2}(mu) - v^l(mu_other)
    // where mu_other is the already-filled neighbour.
    Int cross_down(long l, long mu) {
        long other = (mu >= 1) ? mu - 1 : mu + 1;
        return get(l - 2, mu) + 2 * get(l, mu) + get(l + 2, mu) - get(l, other);
    }

    long lambda_max_ = 0, mu_min_ = 0, mu_max_ = 0, grid_max_ = 0;
    std::map<std::pair<long, long>, Int> values_;
};

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * Dimension identities tying the tables to tensor space:
 *  (i)   sum_mu v(mu) dim Delta_n(mu) = 4^n,
 *  (ii)  sum_mu v_M^lambda(mu) dim Delta_n(mu) = dim M_lambda^n,
 *  (iii) TL: sum_{u >= s} dim Delta_n(u) = C(n, (n-s)/2).
 */
inline IdentityReport check_dimension_identities(long n_max) {
    IdentityReport rep;
    auto v = v_table(n_max);
    for (long n = 1; n <= n_max; ++n) {
        Int total = 0;
        for (long mu = -n; mu <= n; mu += 2) total += v.at(mu) * blob_standard_dim(n, mu);
        Int expected = int_pow(4, static_cast<unsigned long>(n));
        rep.checks.push_back({"sum v(mu) dim Delta_" + std::to_string(n) +
                                  " = 4^" + std::to_string(n),
                              total == expected,
                              total.get_str() + " vs " + expected.get_str()});
    }
    long vm_nmax = std::min<long>(n_max, 5);
    auto vm = VmTable::build(2 * vm_nmax, vm_nmax);
    for (long n = 1; n <= vm_nmax; ++n) {
        bool ok = true;
        std::string detail;
        for (long lambda = 0; lambda <= 2 * n; lambda += 2) {
            Int total = 0;
            for (long mu = -n; mu <= n; mu += 2)
                total += vm.value(lambda, mu) * blob_standard_dim(n, mu);
            Int expected = blob_perm_dim(n, lambda);
            if (total != expected) {
                ok = false;
                detail += "lambda=" + std::to_string(lambda) + ": " +
                          total.get_str() + " vs " + expected.get_str() + "; ";
            }
        }
        rep.checks.push_back({"sum v_M^lambda(mu) dim Delta_" + std::to_string(n) +
                                  " = dim M_lambda",
                              ok, detail});
    }
    for (long n = 1; n <= n_max; ++n) {
        bool ok = true;
        for (long s = n % 2; s <= n; s += 2) {
            Int total = 0;
            for (long u = s; u <= n; u += 2) total += tl_standard_dim(n, u);
            if (total != binomial(n, (n - s) / 2)) ok = false;
        }
        rep.checks.push_back(
            {"TL telescoping at n=" + std::to_string(n), ok, ""});
    }
    return rep;
}

/**
 * Consistency of the restriction combinatorics: the cross template
 * a + 2b + c = x + y on every interior entry of the filled v_M table, and
 * the Pascal identity for the permutation-module dimensions.
 */
inline IdentityReport restriction_consistency(long n_max) {
    IdentityReport rep;
    auto vm = VmTable::build(2 * n_max, n_max);
    bool crosses_ok = true;
    std::string detail;
    for (long mu = vm.mu_min() + 1; mu <= vm.mu_max() - 1; ++mu) {
        for (long lambda = -vm.lambda_max() + 2; lambda <= vm.lambda_max() - 2;
             lambda += 2) {
            Int lhs = vm.value(lambda - 2, mu) + 2 * vm.value(lambda, mu) +
                      vm.value(lambda + 2, mu);
            Int rhs = vm.value(lambda, mu + 1) + vm.value(lambda, mu - 1);
            if (lhs != rhs) {
                crosses_ok = false;
                detail += "(" + std::to_string(lambda) + "," + std::to_string(mu) +
                          "); ";
            }
        }
    }
    rep.checks.push_back({"cross template a+2b+c = x+y", crosses_ok, detail});
    bool pascal_ok = true;
    for (long n = 1; n <= n_max; ++n)
        for (long lambda = -2 * n; lambda <= 2 * n; lambda += 2)
            if (blob_perm_dim(n + 1, lambda) !=
                blob_perm_dim(n, lambda + 2) + 2 * blob_perm_dim(n, lambda) +
                    blob_perm_dim(n, lambda - 2))
                pascal_ok = false;
    rep.checks.push_back({"restriction dimension identity", pascal_ok, ""});
    return rep;
}

/**
 * TL permutation-module standard content: multiplicity one for
 * u in {s, s+2, ..., n}, zero below s; the dimensions telescope to C(n,(n-s)/2).
 */
struct TlPermContent {
    long n = 0, s = 0;
    std::map<long, Int> multiplicity;
    bool dim_check = false;
};

inline TlPermContent tl_perm_content(long n, long s) {
    if (s < 0 || s > n || ((n - s) % 2) != 0)
        throw std::out_of_range("tl_perm_content: need 0 <= s <= n, s = n mod 2");
    TlPermContent out;
    out.n = n;
    out.s = s;
    Int total = 0;
    for (long u = n % 2; u <= n; u += 2) {
        out.multiplicity[u] = u >= s ? 1 : 0;
        if (u >= s) total += tl_standard_dim(n, u);
    }
    out.dim_check = total == binomial(n, (n - s) / 2);
    return out;
}

// Prop (prefull1): for lambda an M-weight (lambda >= 0 even),
// v_M^lambda(mu) is 1 at 2mu = -lambda and 2mu = lambda + 2,
// and 0 strictly between.
inline bool check_prefull_pattern(const VmTable& vm) {
    for (long lambda = 0; lambda <= vm.lambda_max(); lambda += 2) {
        for (long mu = vm.mu_min(); mu <= vm.mu_max(); ++mu) {
            Int val = vm.value(lambda, mu);
            if (2 * mu == -lambda || 2 * mu == lambda + 2) {
                if (val != 1) return false;
            } else if ((2 * mu > -lambda && 2 * mu < 0) ||
                       (2 * mu > 0 && 2 * mu < lambda + 2)) {
                if (val != 0) return false;
            }
        }
    }
    return true;
}

// simple CSV for the one-parameter tables, paper orientation (lambda descending)
inline std::string table_csv(const std::map<long, Int>& t) {
    std::ostringstream os;
    os << "lambda,value\n";
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        os << it->first << "," << it->second.get_str() << "\n";
    return os.str();
}

inline nlohmann::json table_json(const std::string& kind,
                                 const std::map<long, Int>& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        entries.push_back({{"lambda", it->first}, {"value", it->second.get_str()}});
    return nlohmann::json{{"kind", kind}, {"entries", entries}};
}

}  // namespace blobtilt
