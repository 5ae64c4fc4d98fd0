#include "repcontain/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace repcontain {

SchurElement::SchurElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
}

SchurElement::SchurElement(int n, const Partition& lambda, BigInt mult) : SchurElement(n) {
    add_term(lambda, mult);
}

SchurElement SchurElement::elementary(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("elementary index must lie in 0..n");
    return SchurElement(n, Partition::column(j));
}

BigInt SchurElement::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int SchurElement::max_box_count() const {
    int m = 0;
    for (const auto& [lambda, mult] : terms_) m = std::max(m, lambda.size());
    return m;
}

SchurElement& SchurElement::add_term(const Partition& lambda, const BigInt& mult) {
    if (lambda.length() > n_) {
        throw std::invalid_argument("partition has more rows than variables");
    }
    if (mult < 0) throw std::invalid_argument("multiplicities must be nonnegative");
    if (mult == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(lambda, mult);
    if (!inserted) it->second += mult;
    return *this;
}

std::string SchurElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, mult] : terms_) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += mult.str() + "*";
        out += lambda.empty() ? "1" : "s" + lambda.to_string();
    }
    return out;
}

SchurElement add(const SchurElement& f, const SchurElement& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("mismatched variable counts");
    SchurElement out = f;
    for (const auto& [lambda, mult] : g.terms()) out.add_term(lambda, mult);
    return out;
}

SchurElement scale(const BigInt& c, const SchurElement& f) {
    SchurElement out(f.vars());
    if (c == 0) return out;
    for (const auto& [lambda, mult] : f.terms()) out.add_term(lambda, c * mult);
    return out;
}

bool leq(const SchurElement& f, const SchurElement& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("mismatched variable counts");
    for (const auto& [lambda, mult] : f.terms()) {
        if (mult > g.coefficient(lambda)) return false;
    }
    return true;
}

namespace {

// Walks every Littlewood-Richardson tableau of content nu built on top of mu,
// encoded as a chain of horizontal strips (one strip per entry value). The
// ballot condition on the reverse reading word becomes a rowwise prefix bound
// of each strip against the previous one. Shapes are capped at n rows, which
// is exactly the s_lambda = 0 truncation of the fixed-n semiring.
class LrStripWalker {
public:
    LrStripWalker(const Partition& mu, const Partition& nu, int n,
                  std::function<void(const std::vector<int>&)> sink)
        : n_(n), nu_(nu), sink_(std::move(sink)), shape_(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) shape_[static_cast<size_t>(i)] = mu.part(i);
    }

    void run() {
        // Value v can only sit in row >= v, so content longer than n dies.
        if (nu_.length() > n_) return;
        place_value(0, std::vector<int>(static_cast<size_t>(n_), 0));
    }

private:
    void place_value(int v, const std::vector<int>& prev_strip) {
        if (v == nu_.length()) {
            sink_(shape_);
            return;
        }
        std::vector<int> strip(static_cast<size_t>(n_), 0);
        std::vector<int> before = shape_;
        place_row(v, 0, nu_.parts()[static_cast<size_t>(v)], 0, 0, before, prev_strip, strip);
    }

    // Chooses how many boxes of value v land in row r. prev_prefix counts the
    // previous strip's boxes in rows 0..r-1; cur_prefix this strip's in the
    // same range.
    void place_row(int v, int r, int remaining, int prev_prefix, int cur_prefix,
                   const std::vector<int>& before, const std::vector<int>& prev_strip,
                   std::vector<int>& strip) {
        if (r == n_) {
            if (remaining == 0) place_value(v + 1, strip);
            return;
        }
        size_t ur = static_cast<size_t>(r);
        int cap = remaining;
        if (r > 0) cap = std::min(cap, before[ur - 1] - shape_[ur]);
        if (v > 0) cap = std::min(cap, prev_prefix - cur_prefix);
        for (int a = 0; a <= cap; ++a) {
            strip[ur] = a;
            shape_[ur] += a;
            place_row(v, r + 1, remaining - a, prev_prefix + prev_strip[ur], cur_prefix + a,
                      before, prev_strip, strip);
            shape_[ur] -= a;
        }
        strip[ur] = 0;
    }

    int n_;
    const Partition& nu_;
    std::function<void(const std::vector<int>&)> sink_;
    std::vector<int> shape_;
};

Partition from_padded(const std::vector<int>& shape) {
    std::vector<int> parts;
    for (int p : shape) {
        if (p == 0) break;
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

void accumulate_product(const Partition& mu, const Partition& nu, int n, const BigInt& coeff,
                        std::map<Partition, BigInt>& acc) {
    // The expansion is symmetric; iterate strips of the smaller factor.
    const Partition& base = mu.size() >= nu.size() ? mu : nu;
    const Partition& content = mu.size() >= nu.size() ? nu : mu;
    LrStripWalker walker(base, content, n, [&](const std::vector<int>& shape) {
        acc[from_padded(shape)] += coeff;
    });
    walker.run();
}

}  // namespace

SchurElement multiply(const SchurElement& f, const SchurElement& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("mismatched variable counts");
    int n = f.vars();
    std::map<Partition, BigInt> acc;
    for (const auto& [mu, a] : f.terms()) {
        for (const auto& [nu, b] : g.terms()) {
            accumulate_product(mu, nu, n, a * b, acc);
        }
    }
    SchurElement out(n);
    for (const auto& [lambda, mult] : acc) out.add_term(lambda, mult);
    return out;
}

SchurElement power(const SchurElement& f, int k) {
    if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
    SchurElement out = SchurElement::unit(f.vars());
    for (int i = 0; i < k; ++i) out = multiply(out, f);
    return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    for (int i = 0; i < mu.length(); ++i) {
        if (mu.part(i) > lambda.part(i)) return 0;
    }
    if (lambda.empty()) return 1;  // forces mu = nu = ()
    int n = lambda.length();
    if (mu.length() > n || nu.length() > n) return 0;
    BigInt count = 0;
    const Partition& base = mu.size() >= nu.size() ? mu : nu;
    const Partition& content = mu.size() >= nu.size() ? nu : mu;
    LrStripWalker walker(base, content, n, [&](const std::vector<int>& shape) {
        if (from_padded(shape) == lambda) ++count;
    });
    walker.run();
    return count;
}

SchurElement pieri_e(const Partition& mu, int j, int n) {
    if (j < 0 || j > n) throw std::invalid_argument("elementary index must lie in 0..n");
    if (mu.length() > n) throw std::invalid_argument("partition has more rows than variables");
    SchurElement out(n);
    std::vector<int> shape(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) shape[static_cast<size_t>(i)] = mu.part(i);
    // Add j boxes, at most one per row, keeping the shape a partition.
    std::function<void(int, int)> place = [&](int r, int remaining) {
        if (remaining == 0) {
            out.add_term(from_padded(shape), 1);
            return;
        }
        if (r == n) return;
        size_t ur = static_cast<size_t>(r);
        if (n - r > remaining) place(r + 1, remaining);
        if (r == 0 || shape[ur] + 1 <= shape[ur - 1]) {
            shape[ur] += 1;
            place(r + 1, remaining - 1);
            shape[ur] -= 1;
        }
    };
    place(0, j);
    return out;
}

namespace {

void enumerate_ssyt(const Partition& lambda, int n,
                    const std::function<void(const std::vector<int>&)>& sink) {
    int rows = lambda.length();
    if (rows > n) return;
    if (rows == 0) {
        sink(std::vector<int>(static_cast<size_t>(n), 0));
        return;
    }
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);
    }
    std::vector<int> content(static_cast<size_t>(n), 0);
    std::function<void(int, int)> place = [&](int r, int c) {
        if (r == rows) {
            sink(content);
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c == lambda.part(r)) {
            next_r = r + 1;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && c < lambda.part(r - 1)) {
            lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        }
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            content[static_cast<size_t>(v - 1)]++;
            place(next_r, next_c);
            content[static_cast<size_t>(v - 1)]--;
        }
    };
    place(0, 0);
}

const MonomialExpansion& cached_expansion(const Partition& lambda, int n) {
    static std::map<std::pair<int, Partition>, MonomialExpansion> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, lambda);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MonomialExpansion exp;
    exp.n = n;
    enumerate_ssyt(lambda, n, [&](const std::vector<int>& content) { exp.terms[content] += 1; });
    return cache.emplace(std::move(key), std::move(exp)).first->second;
}

}  // namespace

MonomialExpansion monomial_expansion(const Partition& lambda, int n) {
    return cached_expansion(lambda, n);
}

MonomialExpansion monomial_expansion(const SchurElement& f) {
    MonomialExpansion out;
    out.n = f.vars();
    for (const auto& [lambda, mult] : f.terms()) {
        const MonomialExpansion& exp = cached_expansion(lambda, f.vars());
        for (const auto& [alpha, c] : exp.terms) out.terms[alpha] += mult * c;
    }
    return out;
}

MonomialExpansion monomial_product(const MonomialExpansion& a, const MonomialExpansion& b) {
    if (a.n != b.n) throw std::invalid_argument("mismatched variable counts");
    MonomialExpansion out;
    out.n = a.n;
    std::vector<int> gamma(static_cast<size_t>(a.n));
    for (const auto& [alpha, ca] : a.terms) {
        for (const auto& [beta, cb] : b.terms) {
            for (size_t i = 0; i < gamma.size(); ++i) gamma[i] = alpha[i] + beta[i];
            out.terms[gamma] += ca * cb;
        }
    }
    return out;
}

SchurElement decompose_monomials(const MonomialExpansion& m) {
    SchurElement out(m.n == 0 ? 1 : m.n);
    std::map<std::vector<int>, BigInt> work = m.terms;
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const std::vector<int>& alpha = lead->first;
        BigInt c = lead->second;
        for (size_t i = 0; i + 1 < alpha.size(); ++i) {
            if (alpha[i] < alpha[i + 1]) {
                throw internal_inconsistency_error(
                    "monomial decomposition: leading exponent is not a partition");
            }
        }
        if (c < 0) {
            throw internal_inconsistency_error(
                "monomial decomposition: negative leading coefficient");
        }
        Partition lambda = from_padded(alpha);
        const MonomialExpansion& exp = cached_expansion(lambda, m.n);
        for (const auto& [beta, q] : exp.terms) {
            auto it = work.find(beta);
            if (it == work.end()) {
                throw internal_inconsistency_error(
                    "monomial decomposition: missing monomial");
            }
            it->second -= c * q;
            if (it->second < 0) {
                throw internal_inconsistency_error(
                    "monomial decomposition: coefficient went negative");
            }
            if (it->second == 0) work.erase(it);
        }
        out.add_term(lambda, c);
    }
    return out;
}

}  // namespace repcontain
