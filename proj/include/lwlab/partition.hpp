#pragma once

#include <lwlab/bigint.hpp>

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lwlab {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty partition is {}.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    long size() const;
    bool empty() const { return parts_.empty(); }

    /// Part with zero padding: part(i) = lambda_i for 1-based i, 0 beyond the length.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    Partition conjugate() const;

    /// Number of odd-length rows.
    int odd_rows() const;
    /// Number of odd-length columns (odd rows of the conjugate).
    int odd_cols() const;

    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;
    /// Parse comma-separated parts; "" and "0" denote the empty partition.
    static Partition parse(const std::string& text);

private:
    void normalize();
    std::vector<int> parts_;
};

/// true iff outer/inner is a vertical strip (inner contained in outer,
/// at most one cell added per row).
bool is_vertical_strip(const Partition& inner, const Partition& outer);

/// Number of standard Young tableaux of the shape, by the hook length formula.
Int hook_count(const Partition& p);

/// I_m(mu) = (mu_m+1, mu_{m-1}+2, ..., mu_1+m); requires length(mu) <= m.
std::vector<int> index_sequence(const Partition& p, int m);

/// Decode a strictly increasing sequence of positive integers as I_m(mu);
/// returns nullopt if it is not of that form (never happens for k_j >= j).
std::optional<Partition> index_sequence_inverse(const std::vector<int>& seq);

/// All partitions with size <= max_size, width <= width_bound and length <= length_bound
/// (negative bound = unbounded), in graded order: by size, then parts in
/// decreasing lexicographic order.
void for_each_partition(long max_size, int width_bound, int length_bound,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> partitions_up_to(long max_size, int width_bound = -1,
                                        int length_bound = -1);

/// Partitions of exactly n (same in-size ordering as for_each_partition).
std::vector<Partition> partitions_of(long n, int width_bound = -1, int length_bound = -1);

}  // namespace lwlab
