#pragma once

#include <vector>

#include "crb/ball.hpp"
#include "crb/crgeom.hpp"
#include "crb/prebloch.hpp"

namespace crb {

// Bloch-Wigner D(z) = Im Li2(z) + arg(1 - z) log|z|. Exactly real inputs and
// the exact points 0 and 1 give 0. PrecisionExhausted below 32 bits or when
// the ball is too wide to separate z from 0 and 1.
RealBall bw_D(const ComplexBall& z, long prec);

// sum n_z D(z) at the designated embedding; c_F contributes 0.
RealBall D_of_element(const PreBlochElement& e, long prec);

// Same sum at every complex root of the field, in root order. Real roots
// are skipped.
struct EmbeddingD {
  int root_index;
  RealBall value;
};
std::vector<EmbeddingD> D_per_embedding(const PreBlochElement& e, long prec);

// 2 D(c[p0,p1,p2,p3]) - sum_k (-1)^k D(-e^{2iA(face k)}), where face k omits
// p_k. Contains 0 for every generic configuration.
RealBall face_D_identity(const ConfigFour& c, const NumberField& field, long prec);

}  // namespace crb
