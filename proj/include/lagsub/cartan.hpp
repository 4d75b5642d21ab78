#pragma once

#include <string>
#include <vector>

namespace lagsub {

/// Ranks above this are rejected unless the caller raises the cap
/// explicitly (CLI: LAGSUB_MAX_RANK).  Keeps Weyl-group and ideal
/// enumeration at desk scale.
inline constexpr int kDefaultMaxRank = 6;

/// Cartan matrix of a simple type, entries a[i][j] = <alpha_j, alpha_i^vee>.
/// Bourbaki numbering and short/long conventions throughout.
class CartanMatrix {
public:
    /// Canonical matrix of the named type, e.g. of('B', 3).
    static CartanMatrix of(char letter, int rank, int max_rank = kDefaultMaxRank);

    /// Parse a type string such as "B3" or "G2".
    static CartanMatrix parse(const std::string& type, int max_rank = kDefaultMaxRank);

    /// Validate externally supplied entries against the named type.
    static CartanMatrix from_entries(char letter, int rank,
                                     const std::vector<std::vector<int>>& entries,
                                     int max_rank = kDefaultMaxRank);

    char letter() const { return letter_; }
    int rank() const { return rank_; }
    int entry(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    std::string type_string() const { return std::string(1, letter_) + std::to_string(rank_); }

    /// Number of positive roots of the type (classical closed form).
    std::size_t positive_root_count() const;

    /// Order of the Weyl group (classical closed form).
    unsigned long long weyl_order() const;

private:
    CartanMatrix(char letter, int rank, std::vector<std::vector<int>> a)
        : letter_(letter), rank_(rank), a_(std::move(a)) {}

    char letter_;
    int rank_;
    std::vector<std::vector<int>> a_;
};

} // namespace lagsub
