#ifndef SUPERALG_ACTIONS_HPP
#define SUPERALG_ACTIONS_HPP

#include "superalg/super_poly.hpp"

namespace superalg {

/// f . g: apply the conjugated operator polynomial of f to g, with
/// x_i -> d/dx_i and theta_i -> d/dtheta_i. Per monomial the commuting
/// partials act first in the operator product and the exterior partials
/// are composed in increasing index order (rightmost factor applied
/// first). Both arguments carry the theta flavor.
SuperPoly dot(const SuperPoly& f, const SuperPoly& g);

/// f (.) h: like dot but theta_i acts as left multiplication by psi_i
/// on the psi-flavored h.
SuperPoly odot(const SuperPoly& f, const SuperPoly& h);

/// <f, g> = constant coefficient of f . g. Hermitian, non-degenerate;
/// diagonal on monomials with <x^a theta_I, x^a theta_I> =
/// (-1)^binom(|I|,2) a!.
Cyclotomic hermitian_form(const SuperPoly& f, const SuperPoly& g);

/// Sum of second x-partials; equals (x_1^2+...+x_n^2) . f on the theta
/// flavor.
SuperPoly laplacian(const SuperPoly& f);

}  // namespace superalg

#endif
