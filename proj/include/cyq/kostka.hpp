#pragma once

#include <vector>

#include "cyq/intpoly.hpp"
#include "cyq/multisegment.hpp"

namespace cyq::kostka {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int d);

// Dominance: lam >= mu iff every prefix sum of lam is >= that of mu
// (equal totals required).
bool dominates(const Partition& lam, const Partition& mu);

// n(lam) = sum (k-1) lam_k.
long long n_stat(const Partition& lam);

// Number of semistandard tableaux of the given shape and content.
long long ssyt_count(const Partition& shape, const Partition& content);

// Lascoux-Schutzenberger charge of a word whose content is a partition.
int charge_of_word(const std::vector<int>& word);

// Kostka-Foulkes polynomial K_{lam,mu}(q) as the charge generating function
// over SSYT(lam, mu); brute-force enumeration.
IntPoly kostka_foulkes(const Partition& lam, const Partition& mu);

// t^{n(mu)-n(lam)} K_{lam,mu}(1/t): the local IC polynomial predicted for the
// n = 1 nilpotent orbits.
IntPoly ktilde_from_kostka(const Partition& lam, const Partition& mu);

// n = 1 dictionary between partitions and multisegments.
Multisegment to_multisegment(const Partition& lam);
Partition to_partition(const Multisegment& ms);

}  // namespace cyq::kostka
