/*
   Copyright 2026 The snw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "snw/core.hpp"
#include "snw/polynomial.hpp"

namespace snw {

/// sigma_p: x_i -> x_i, y_i -> y_i + p_i E_{00}(i).
class EndoP {
 public:
  /// Throws InvalidEndo when check_pij fails.
  explicit EndoP(std::vector<Polynomial> p);

  std::size_t dim() const { return p_.size(); }
  const std::vector<Polynomial>& p() const { return p_; }

 private:
  std::vector<Polynomial> p_;
};

/// tau_q: x_i -> x_i + E_{00}(i) q_i, y_i -> y_i. The q_i are polynomials in
/// the y's, stored by exponent.
class EndoQ {
 public:
  explicit EndoQ(std::vector<Polynomial> q);

  std::size_t dim() const { return q_.size(); }
  const std::vector<Polynomial>& q() const { return q_; }

 private:
  std::vector<Polynomial> q_;
};

bool check_pij(const std::vector<Polynomial>& p);
/// The same identity read in the y-variables.
inline bool check_qij(const std::vector<Polynomial>& q) { return check_pij(q); }

Element sigma_p_apply(const EndoP& p, const Element& a);
/// p''_i = p_i + p'_i - x_i p_i p'_i, so sigma_{p''} = sigma_p o sigma_{p'}.
EndoP compose_sigma(const EndoP& p, const EndoP& p2);
Element tau_q_apply(const EndoQ& q, const Element& a);

/// Image dimension of the endomorphism x -> x_image, y -> y_image of S_1,
/// spanned by x_image^a y_image^b for a, b <= bound.
std::size_t image_dimension(const Element& x_image, const Element& y_image, unsigned bound);

struct FiniteImage {
  Element x_image;
  Element y_image;
  std::size_t dimension;
};

/// x -> 1 + N, y -> (1 + N)^{-1} with N = sum_{i=0}^{m-2} E_{i,i+1}; m >= 2.
FiniteImage finite_image_endo(unsigned m);

}  // namespace snw
