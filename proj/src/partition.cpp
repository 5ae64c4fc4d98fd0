#include "repcontain/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace repcontain {

namespace {

void validate(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::column(int j) {
    if (j < 0) throw std::invalid_argument("column length must be nonnegative");
    return Partition(std::vector<int>(static_cast<size_t>(j), 1));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition operator+(const Partition& mu, const Partition& nu) {
    int len = std::max(mu.length(), nu.length());
    std::vector<int> sum(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) sum[static_cast<size_t>(i)] = mu.part(i) + nu.part(i);
    return Partition(std::move(sum));
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) {
        throw std::invalid_argument("dominance order is only defined for equal sizes");
    }
    int len = std::max(mu.length(), nu.length());
    long long acc_mu = 0, acc_nu = 0;
    for (int i = 0; i < len; ++i) {
        acc_mu += mu.part(i);
        acc_nu += nu.part(i);
        if (acc_mu > acc_nu) return false;
    }
    return true;
}

Partition reduce_mod_determinant(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    if (lambda.length() > n) {
        throw std::invalid_argument("cannot reduce a partition with more than n rows");
    }
    int last = lambda.part(n - 1);
    if (last == 0) return lambda;
    std::vector<int> reduced;
    for (int i = 0; i < n - 1; ++i) {
        int v = lambda.part(i) - last;
        if (v > 0) reduced.push_back(v);
    }
    return Partition(std::move(reduced));
}

namespace {

void emit_partitions(int remaining, int max_part, int max_length, std::vector<int>& cur,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int boxes, int max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    emit_partitions(boxes, boxes, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_boxes, int max_length) {
    std::vector<Partition> out;
    for (int b = 0; b <= max_boxes; ++b) {
        auto batch = partitions_of(b, max_length);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace repcontain
