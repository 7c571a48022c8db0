#pragma once

#include "lpns/filter_bank.hpp"

namespace lpns {

/// Low-high interaction T_v w = sum_l S_{l-1} v * Delta_l w over the resolved
/// band, with products formed pointwise in physical space.
RealField paraproduct(const FilterBank& bank, const RealField& v, const RealField& w);

/// Resonant part R(v, w) = sum_l Delta_l v * sum_{|l-l'|<=1} Delta_l' w;
/// band-edge terms keep only in-range neighbors.
RealField remainder_term(const FilterBank& bank, const RealField& v, const RealField& w);

struct BonyPieces {
  RealField t_vw;
  RealField t_wv;
  RealField remainder;
};

BonyPieces bony_decompose(const FilterBank& bank, const RealField& v, const RealField& w);

/// || T_v w + T_w v + R(v,w) - v w ||_2 <= 1e-8 ||v||_2 ||w||_2 for fields whose
/// spectra (and product spectrum) stay inside the resolved lattice.
CheckReport bony_reconstruct_check(const FilterBank& bank, const RealField& v,
                                   const RealField& w);

/// Largest per-axis lattice index carrying spectral mass above 1e-13 of the
/// peak; used to detect products that would alias.
std::array<int, 3> support_extent(const RealField& f);

}  // namespace lpns
