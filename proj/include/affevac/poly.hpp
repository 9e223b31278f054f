#pragma once

#include "affevac/partition.hpp"
#include "affevac/qpoly.hpp"

namespace affevac {

/// Irreducible symmetric-group character value chi^lambda evaluated on
/// cycle type rho, by the Murnaghan-Nakayama border-strip recursion.
long long character(const Partition& lambda, const Partition& rho);

/// Charge generating function over SSYT(lambda, mu).
QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu);
/// Cocharge polynomial q^{b(mu)} K(1/q).
QPolynomial kostka_foulkes_cocharge(const Partition& lambda, const Partition& mu);
/// Cocharge polynomial from the fermionic sum over admissible configurations.
QPolynomial kostka_foulkes_fermionic(const Partition& lambda, const Partition& mu);

/// Q^mu_rho(q) = sum_lambda chi^lambda_rho Ktilde_{lambda,mu}(q).
QPolynomial greens_polynomial(const Partition& mu, const Partition& rho);

/// <2^{n/2}> or <2^{(n-1)/2}, 1>; primed variant <2^{n/2-1}, 1, 1> (n even).
Partition rho2(int n, bool primed = false);

/// z_rho = prod i^{m_i} m_i!.
long long centralizer_size(const Partition& rho);

}  // namespace affevac
