#include "lagsub/cartan.hpp"

#include <cctype>

#include "lagsub/error.hpp"

namespace lagsub {

namespace {

std::vector<std::vector<int>> diagonal2(int rank) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(rank),
                                    std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    return a;
}

void set_edge(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

} // namespace

CartanMatrix CartanMatrix::of(char letter, int rank, int max_rank) {
    letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
    if (rank < 1) throw InvalidCartanMatrix("rank must be positive");
    auto a = diagonal2(rank);
    switch (letter) {
    case 'A':
        for (int i = 0; i + 1 < rank; ++i) set_edge(a, i, i + 1, -1, -1);
        break;
    case 'B':
        if (rank < 2)
            throw InvalidCartanMatrix("B1 is not supported; it coincides with A1 - use A1");
        for (int i = 0; i + 1 < rank; ++i) set_edge(a, i, i + 1, -1, -1);
        set_edge(a, rank - 2, rank - 1, -1, -2); // alpha_rank short
        break;
    case 'C':
        if (rank < 2)
            throw InvalidCartanMatrix("C1 is not supported; it coincides with A1 - use A1");
        for (int i = 0; i + 1 < rank; ++i) set_edge(a, i, i + 1, -1, -1);
        set_edge(a, rank - 2, rank - 1, -2, -1); // alpha_rank long
        break;
    case 'D':
        if (rank == 3)
            throw InvalidCartanMatrix("D3 is not supported; it coincides with A3 - use A3");
        if (rank < 4)
            throw InvalidCartanMatrix("D requires rank >= 4");
        for (int i = 0; i + 1 < rank - 1; ++i) set_edge(a, i, i + 1, -1, -1);
        set_edge(a, rank - 3, rank - 1, -1, -1);
        break;
    case 'E':
        if (rank < 6 || rank > 8) throw InvalidCartanMatrix("E requires rank 6, 7 or 8");
        // chain 1-3-4-5-...-rank, node 2 attached to node 4
        set_edge(a, 0, 2, -1, -1);
        set_edge(a, 1, 3, -1, -1);
        for (int i = 2; i + 1 < rank; ++i) set_edge(a, i, i + 1, -1, -1);
        break;
    case 'F':
        if (rank != 4) throw InvalidCartanMatrix("F requires rank 4");
        set_edge(a, 0, 1, -1, -1);
        set_edge(a, 1, 2, -1, -2); // alpha_3, alpha_4 short
        set_edge(a, 2, 3, -1, -1);
        break;
    case 'G':
        if (rank != 2) throw InvalidCartanMatrix("G requires rank 2");
        set_edge(a, 0, 1, -3, -1); // alpha_1 short
        break;
    default:
        throw InvalidCartanMatrix(std::string("unknown type letter '") + letter + "'");
    }
    if (rank > max_rank)
        throw CapExceeded("rank " + std::to_string(rank) + " exceeds the cap of " +
                          std::to_string(max_rank));
    return CartanMatrix(letter, rank, std::move(a));
}

CartanMatrix CartanMatrix::parse(const std::string& type, int max_rank) {
    if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
        throw InvalidCartanMatrix("type string must be a letter followed by a rank, e.g. \"B3\"");
    for (std::size_t i = 1; i < type.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(type[i])))
            throw InvalidCartanMatrix("bad rank in type string '" + type + "'");
    return of(type[0], std::stoi(type.substr(1)), max_rank);
}

CartanMatrix CartanMatrix::from_entries(char letter, int rank,
                                        const std::vector<std::vector<int>>& entries,
                                        int max_rank) {
    CartanMatrix canonical = of(letter, rank, max_rank);
    if (entries != canonical.a_)
        throw InvalidCartanMatrix("entries do not match the canonical Cartan matrix of " +
                                  canonical.type_string());
    return canonical;
}

std::size_t CartanMatrix::positive_root_count() const {
    const std::size_t l = static_cast<std::size_t>(rank_);
    switch (letter_) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return rank_ == 6 ? 36 : (rank_ == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: throw InvalidCartanMatrix("unknown type");
    }
}

unsigned long long CartanMatrix::weyl_order() const {
    const int l = rank_;
    switch (letter_) {
    case 'A': return factorial(l + 1);
    case 'B':
    case 'C': return (1ULL << l) * factorial(l);
    case 'D': return (1ULL << (l - 1)) * factorial(l);
    case 'E': return l == 6 ? 51840ULL : (l == 7 ? 2903040ULL : 696729600ULL);
    case 'F': return 1152ULL;
    case 'G': return 12ULL;
    default: throw InvalidCartanMatrix("unknown type");
    }
}

} // namespace lagsub
