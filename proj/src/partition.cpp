#include <lwlab/partition.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lwlab {

void Partition::normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("partition parts must be weakly decreasing and positive");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
    std::vector<int> c(width(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

int Partition::odd_rows() const {
    int r = 0;
    for (int p : parts_) r += p & 1;
    return r;
}

int Partition::odd_cols() const {
    return conjugate().odd_rows();
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    if (parts.size() == 1 && parts[0] == 0) parts.clear();
    return Partition(std::move(parts));
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

Int hook_count(const Partition& p) {
    if (p.empty()) return 1;
    Partition c = p.conjugate();
    Int denom = 1;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            denom *= (p.part(i) - j) + (c.part(j) - i) + 1;
    return div_exact(factorial(p.size()), denom);
}

std::vector<int> index_sequence(const Partition& p, int m) {
    if (p.length() > m) throw std::invalid_argument("index_sequence: length(p) > m");
    std::vector<int> seq(m);
    for (int j = 1; j <= m; ++j) seq[j - 1] = p.part(m + 1 - j) + j;
    return seq;
}

std::optional<Partition> index_sequence_inverse(const std::vector<int>& seq) {
    const int m = static_cast<int>(seq.size());
    std::vector<int> mu(m);
    for (int j = 1; j <= m; ++j) {
        int part = seq[j - 1] - j;
        if (part < 0) return std::nullopt;
        mu[m - j] = part;
    }
    for (int i = 0; i + 1 < m; ++i)
        if (mu[i] < mu[i + 1]) return std::nullopt;
    return Partition(std::move(mu));
}

namespace {

void rec_parts(long remaining, int max_part, int rows_left, std::vector<int>& acc,
               const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    if (rows_left == 0) return;
    int first = static_cast<int>(std::min<long>(max_part, remaining));
    for (int p = first; p >= 1; --p) {
        acc.push_back(p);
        rec_parts(remaining - p, p, rows_left - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(long max_size, int width_bound, int length_bound,
                        const std::function<void(const Partition&)>& fn) {
    if (max_size < 0) return;
    int wb = width_bound < 0 ? static_cast<int>(max_size) : width_bound;
    int lb = length_bound < 0 ? static_cast<int>(max_size) : length_bound;
    std::vector<int> acc;
    for (long s = 0; s <= max_size; ++s) rec_parts(s, wb, lb, acc, fn);
}

std::vector<Partition> partitions_up_to(long max_size, int width_bound, int length_bound) {
    std::vector<Partition> out;
    for_each_partition(max_size, width_bound, length_bound,
                       [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of(long n, int width_bound, int length_bound) {
    std::vector<Partition> out;
    if (n < 0) return out;
    int wb = width_bound < 0 ? static_cast<int>(n) : width_bound;
    int lb = length_bound < 0 ? static_cast<int>(n) : length_bound;
    std::vector<int> acc;
    rec_parts(n, wb, lb, acc, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace lwlab
