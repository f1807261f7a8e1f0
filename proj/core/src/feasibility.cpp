#include "lssd/feasibility.hpp"

#include <stdexcept>

namespace lssd {

ScreenVerdict integrality_screen(const Int& v, const Int& k,
                                 const Int& lambda) {
  DesignParams p = validate_params(v, k, lambda);

  ScreenVerdict sv;
  sv.s_integral = p.s.has_value();
  sv.degenerate = p.degenerate;
  sv.gcd_k_v = gcd(k, v);
  sv.gcd_s_v = 0;
  sv.v_composite = !is_prime(v);

  if (sv.s_integral) {
    const Int& s = *p.s;
    sv.gcd_s_v = gcd(s, v);
    sv.nu_plus_integral = divides(v, k * (k + s));
    sv.nu_minus_integral = divides(v, k * (k - s));
  }

  if (!sv.s_integral) sv.notes.push_back("s_not_integral");
  if (sv.s_integral && !sv.nu_plus_integral && !sv.nu_minus_integral)
    sv.notes.push_back("no_integral_branch");
  if (sv.nu_plus_integral && sv.nu_minus_integral)
    sv.notes.push_back("both_branches_integral");
  if (sv.gcd_k_v == 1) sv.notes.push_back("gcd_k_v_is_1");
  if (sv.s_integral && sv.gcd_s_v == 1) sv.notes.push_back("gcd_s_v_is_1");
  if (!sv.v_composite) sv.notes.push_back("v_prime");
  if (sv.degenerate) sv.notes.push_back("degenerate");

  bool one_branch = sv.nu_plus_integral != sv.nu_minus_integral;
  if (one_branch)
    sv.branch = sv.nu_plus_integral ? Branch::Plus : Branch::Minus;
  sv.feasible = sv.s_integral && one_branch && sv.gcd_k_v > 1 &&
                sv.gcd_s_v > 1 && !sv.degenerate;
  return sv;
}

BoundsReport bounds(const DesignParams& p, bool q111_is_zero) {
  MuNu mn = mu_nu(p);
  const Int &v = p.v, &k = p.k, &l = p.lambda;
  const Int &mu = mn.mu, &nu = mn.nu;

  BoundsReport b;
  Int cross = (v - k) * binom(nu, 3) + k * binom(mu, 3);
  b.noda_lhs_coeff = (k - 2) * l * binom(k, 3) - (v - 2) * cross;
  b.noda_rhs = (v - 2) * ((v - 1) * binom(l, 3) + binom(k, 3) - cross);
  if (b.noda_lhs_coeff > 0)
    b.noda_w_max = b.noda_rhs / b.noda_lhs_coeff + 1;

  if (p.s) {
    const Int& s = *p.s;
    if (2 * k > v) b.krein_w_max = Rat((v - 2) * s, 2 * k - v) + 1;
    if (v == 4 * s * s && v - 2 * k == -2 * s)
      b.menon_w_max = (s % 2 == 0) ? Int(2 * s * s) : Int(2);
  }

  b.absolute_w_max = q111_is_zero ? Int((v + 1) / 2) : Int((v - 1) / 2);
  return b;
}

std::pair<DesignParams, DesignParams> menon_params(const Int& u) {
  if (u < 1) throw std::invalid_argument("need u >= 1");
  DesignParams a = validate_params(4 * u * u, (2 * u - 1) * u, (u - 1) * u);
  DesignParams b = validate_params(4 * u * u, (2 * u + 1) * u, (u + 1) * u);
  return {a, b};
}

FamilyScreen screen_family(int family_id) {
  return screen_family(family_id, default_family_range(family_id));
}

FamilyScreen screen_family(int family_id,
                           const std::vector<FamilySpec>& range) {
  FamilyScreen fs;
  fs.family_id = family_id;
  for (const FamilySpec& spec : range) {
    FamilyRow row;
    row.spec = spec;
    row.result = family_params(spec);
    if (!row.result.rejected) {
      try {
        row.screen = integrality_screen(row.result.v, row.result.k,
                                        row.result.lambda);
        row.pass = row.screen->feasible;
      } catch (const design_error& e) {
        row.result.rejected = true;
        row.result.reason = e.what();
      }
    }
    fs.rows.push_back(std::move(row));
  }

  bool all = true, none = true, iff_m1 = true;
  for (const FamilyRow& r : fs.rows) {
    all = all && r.pass;
    none = none && !r.pass;
    auto it = r.spec.idx.find("m");
    bool m_is_1 = (it != r.spec.idx.end() && it->second == 1);
    iff_m1 = iff_m1 && (r.pass == m_is_1);
  }
  if (fs.rows.empty())
    fs.verdict = FamilyVerdict::Mixed;
  else if (all)
    fs.verdict = FamilyVerdict::AlwaysPass;
  else if (none)
    fs.verdict = FamilyVerdict::NeverPass;
  else if (iff_m1)
    fs.verdict = FamilyVerdict::PassIffMEquals1;
  else
    fs.verdict = FamilyVerdict::Mixed;
  return fs;
}

}  // namespace lssd
