/*
 * Copyright 2026 The hdrcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include "hdrcheck/colorimetry.h"
#include "hdrcheck/error.h"

namespace hdrcheck {

TransferCode TransferCode::checked(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw DomainError("PQ signal " + std::to_string(value) + " outside [0, 1]");
  return TransferCode(value);
}

TransferCode TransferCode::clamped(double value) {
  if (std::isnan(value)) return TransferCode(0.0);
  return TransferCode(std::fmin(std::fmax(value, 0.0), 1.0));
}

Luminance::Luminance(double nits) : nits_(nits) {
  if (!(nits >= 0.0)) throw DomainError("luminance " + std::to_string(nits) + " is negative");
}

double pq_signal_to_nits(double e) {
  if (!(e > 0.0)) return 0.0;
  if (e > 1.0) e = 1.0;
  const double p = std::pow(e, 1.0 / pq::kM2);
  const double num = std::fmax(p - pq::kC1, 0.0);
  const double den = pq::kC2 - pq::kC3 * p;
  return pq::kPeakNits * std::pow(num / den, 1.0 / pq::kM1);
}

double pq_nits_to_signal(double nits) {
  if (!(nits > 0.0)) nits = 0.0;
  if (nits > pq::kPeakNits) nits = pq::kPeakNits;
  const double y = std::pow(nits / pq::kPeakNits, pq::kM1);
  return std::pow((pq::kC1 + pq::kC2 * y) / (1.0 + pq::kC3 * y), pq::kM2);
}

Luminance pq_eotf(TransferCode e) { return Luminance(pq_signal_to_nits(e.value())); }

TransferCode pq_inv_eotf(Luminance y) {
  if (y.nits() > pq::kPeakNits)
    throw DomainError("luminance " + std::to_string(y.nits()) + " exceeds the PQ maximum");
  return TransferCode::clamped(pq_nits_to_signal(y.nits()));
}

}  // namespace hdrcheck
