#pragma once

#include <string>

#include "scatter/potential.hpp"
#include "scatter/vec3.hpp"

namespace scatter {

struct IdentityReport {
    cdouble lhs;
    cdouble rhs;
    double abs_err = 0.0;  // |lhs - rhs| exactly
    double rel_err = 0.0;  // abs_err / max(|lhs|, |rhs|), 0 when both vanish
    std::string context;
};

IdentityReport make_identity_report(cdouble lhs, cdouble rhs, std::string context);

// Amplitude-difference identity:
//   -4pi [A1(beta,alpha,k) - A2(beta,alpha,k)]
//     = int (q1-q2) u1(x,alpha,k) u2(x,-beta,k) dx,
// with the left side from two independent amplitude extractions and the right
// side from a volume quadrature. u2(x,-beta,k) is the solution with incidence
// direction -beta.
IdentityReport amplitude_difference_check(const Potential& q1, const Potential& q2,
                                          const Vec3& beta, const Vec3& alpha,
                                          double k, double tol = 1e-8);

// A(beta, alpha, k) vs A(-alpha, -beta, k), each from its own solve.
IdentityReport reciprocity_check(const Potential& q, const Vec3& beta,
                                 const Vec3& alpha, double k, double tol = 1e-8);

// Verifies the change-of-variables rewriting of the difference integral:
//   int p u1(x,alpha0,k) u2(x,-beta,k) dx  =  int e^{i kappa zeta.x} (1+eps) p dx
// with p = q1-q2, tau = |alpha0-beta|, zeta = (alpha0-beta)/tau, kappa = tau k,
// eps = eps1 + eps2 + eps1 eps2. Equal whether or not the data coincide.
IdentityReport orthogonality_relation_check(const Potential& q1, const Potential& q2,
                                            const Vec3& alpha0, const Vec3& beta,
                                            double k, double tol = 1e-8);

}  // namespace scatter
