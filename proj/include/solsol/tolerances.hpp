#pragma once

// Numeric thresholds used across the library. All problems here are small
// (dim <= 7) dense double-precision computations, so one global relative
// tolerance covers the structural predicates.
namespace solsol::tol {

inline constexpr double kRel = 1e-9;          // structural predicates, relative
inline constexpr double kSvdCutoff = 1e-8;    // nullspace rank: sigma < cutoff * sigma_max
inline constexpr double kCertify = 1e-8;      // soliton / Einstein residual acceptance
inline constexpr double kRicciAgree = 1e-10;  // two-path Ricci agreement
inline constexpr double kDomain = 1e-9;       // strict/nonstrict inequality resolution

}  // namespace solsol::tol
