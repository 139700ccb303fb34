#include "redmod/regularity.hpp"

#include <algorithm>

#include "redmod/specio.hpp"
#include "redmod/torsion.hpp"

namespace redmod {

RegularityCertificate is_t_regular(const FiniteRing& R, std::uint32_t t) {
  if (t < 1) throw BadConfig("regularity requires t >= 1");
  RegularityCertificate cert;
  cert.t = t;
  const std::uint64_t n = R.order();
  bool regular = true;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    const ElemId at = R.pow_id(a, t);
    const ElemId a2t = R.pow_id(a, 2 * static_cast<std::uint64_t>(t));
    const ElemId at1 = R.pow_id(a, t + 1);
    std::optional<ElemId> mccoy, azumaya;
    for (std::uint64_t b = 0; b < n && !mccoy; ++b)
      if (R.mul_id(a2t, static_cast<ElemId>(b)) == at)
        mccoy = static_cast<ElemId>(b);
    for (std::uint64_t b = 0; b < n && !azumaya; ++b)
      if (R.mul_id(at1, static_cast<ElemId>(b)) == at)
        azumaya = static_cast<ElemId>(b);
    if (mccoy.has_value() != azumaya.has_value())
      throw std::logic_error("regularity forms disagree on an element");
    if (!mccoy) {
      if (regular) {
        cert.failing_a = R.element_at(a);
        cert.witnesses.clear();
        cert.azumaya_witnesses.clear();
        regular = false;
      }
      continue;
    }
    if (regular) {
      cert.witnesses.emplace_back(R.element_at(a), R.element_at(*mccoy));
      cert.azumaya_witnesses.emplace_back(R.element_at(a),
                                          R.element_at(*azumaya));
    }
  }
  return cert;
}

namespace {

// Coset arithmetic for R/I on canonical (least-index) representatives.
struct QuotientRing {
  const FiniteRing& R;
  std::vector<ElemId> canon;  // element -> least element of its coset
  std::vector<ElemId> reps;   // sorted canonical representatives

  QuotientRing(const FiniteRing& ring, const Ideal& I) : R(ring) {
    canon.assign(R.order(), static_cast<ElemId>(-1));
    for (std::uint64_t v = 0; v < R.order(); ++v) {
      if (canon[v] != static_cast<ElemId>(-1)) continue;
      for (ElemId i : I.element_ids())
        canon[R.add_id(static_cast<ElemId>(v), i)] = static_cast<ElemId>(v);
    }
    for (std::uint64_t v = 0; v < R.order(); ++v)
      if (canon[v] == v) reps.push_back(static_cast<ElemId>(v));
  }

  ElemId mul(ElemId x, ElemId y) const { return canon[R.mul_id(x, y)]; }
  ElemId pow(ElemId x, std::uint64_t k) const { return canon[R.pow_id(x, k)]; }
};

// t-regularity of R/I decided on coset representatives.
std::optional<ElemId> quotient_regularity_failure(const FiniteRing& R,
                                                  const Ideal& I,
                                                  std::uint32_t t) {
  const QuotientRing Q(R, I);
  for (ElemId a : Q.reps) {
    const ElemId at = Q.pow(a, t);
    const ElemId a2t = Q.pow(a, 2 * static_cast<std::uint64_t>(t));
    bool found = false;
    for (ElemId b : Q.reps)
      if (Q.mul(a2t, b) == at) {
        found = true;
        break;
      }
    if (!found) return a;
  }
  return std::nullopt;
}

bool all_annihilators_semiprime(const FiniteRing& R,
                                std::optional<RingElement>& witness_b) {
  for (std::uint64_t b = 1; b < R.order(); ++b) {
    const RingElement be = R.element_at(static_cast<ElemId>(b));
    if (!semiprimality(annihilator_ideal(R, be)).semiprime) {
      witness_b = be;
      return false;
    }
  }
  return true;
}

Json ring_instance(const FiniteRing& R, std::uint32_t t) {
  return Json{{"ring", R.name()}, {"t", t}};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

AuditReport audit_quotient_closure(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "quotient_closure";
  rep.instance = ring_instance(R, t);
  const RegularityCertificate cert = is_t_regular(R, t);
  if (!cert.holds()) {
    rep.status = AuditStatus::hypothesis_not_met;
    rep.notes = "ring is not t-regular (failing element " +
                R.element_str(*cert.failing_a) + "); no quotients to check";
    return rep;
  }
  for (const Ideal& I : enumerate_ideals(R)) {
    if (auto bad = quotient_regularity_failure(R, I, t)) {
      rep.status = AuditStatus::fails;
      rep.witness = Json{{"ideal", ideal_json(I)},
                         {"coset_of", element_json(R, R.element_at(*bad))}};
      return rep;
    }
  }
  rep.status = AuditStatus::holds;
  return rep;
}

AuditReport audit_domain_iff_field(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "domain_iff_field";
  rep.instance = ring_instance(R, t);
  const Classification cls = classify(R);
  if (!cls.is_domain) {
    rep.status = AuditStatus::hypothesis_not_met;
    rep.notes = "ring is not a domain";
    return rep;
  }
  const bool treg = is_t_regular(R, t).holds();
  rep.status = treg == cls.is_field ? AuditStatus::holds : AuditStatus::fails;
  if (rep.status == AuditStatus::fails)
    rep.witness = Json{{"t_regular", treg}, {"field", cls.is_field}};
  return rep;
}

AuditReport audit_semiprime_implies_eps(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "semiprime_implies_eps";
  rep.instance = ring_instance(R, t);
  const RegularityCertificate cert = is_t_regular(R, t);
  std::optional<RingElement> bad_b;
  const bool ann_ok = all_annihilators_semiprime(R, bad_b);
  const EpsReducedReport eps = is_eps_reduced(regular_module(R), t);
  if (!cert.holds() || !ann_ok) {
    rep.status = AuditStatus::hypothesis_not_met;
    rep.notes = std::string("hypothesis: t-regular=") +
                bool_str(cert.holds()) + ", annihilators semiprime=" +
                bool_str(ann_ok) +
                (bad_b ? " (witness b=" + R.element_str(*bad_b) + ")" : "") +
                "; conclusion computed anyway: eps_reduced=" +
                bool_str(eps.reduced);
    return rep;
  }
  rep.status = eps.reduced ? AuditStatus::holds : AuditStatus::fails;
  if (!eps.reduced)
    rep.witness =
        Json{{"failing_scalar", element_json(R, *eps.witness)}};
  return rep;
}

AuditReport audit_thm_all_modules(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "thm_all_modules";
  rep.instance = ring_instance(R, t);
  std::optional<RingElement> bad_b;
  const bool hyp = all_annihilators_semiprime(R, bad_b);

  bool cyclics_eps = true;
  std::optional<std::string> cyc_witness;
  for (const Ideal& I : enumerate_ideals(R)) {
    const EpsReducedReport eps = is_eps_reduced(cyclic_quotient(R, I), t);
    if (!eps.reduced) {
      cyclics_eps = false;
      cyc_witness = "R/" + I.name() + " with scalar " +
                    R.element_str(*eps.witness);
      break;
    }
  }
  const bool treg = is_t_regular(R, t).holds();
  const bool equivalence = cyclics_eps == treg;

  if (!hyp) {
    rep.status = AuditStatus::hypothesis_not_met;
    rep.notes = "(0:" + R.element_str(*bad_b) +
                ") is not semiprime; conclusion equivalence " +
                (equivalence ? "nonetheless holds" : "fails") +
                " on this instance (cyclic eps=" + bool_str(cyclics_eps) +
                ", t_regular=" + bool_str(treg) + ")";
    return rep;
  }
  rep.status = equivalence ? AuditStatus::holds : AuditStatus::fails;
  rep.notes = "every cyclic module eps-reduced: " + bool_str(cyclics_eps) +
              "; t-regular: " + bool_str(treg);
  if (!equivalence && cyc_witness) rep.witness = Json{{"module", *cyc_witness}};
  if (!equivalence && !cyc_witness)
    rep.witness = Json{{"detail", "cyclic modules reduced but ring is not "
                                  "t-regular"}};
  return rep;
}

AuditReport audit_regular_iff(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "regular_iff";
  rep.instance = ring_instance(R, t);
  const bool regular = is_t_regular(R, 1).holds();
  const bool treg = is_t_regular(R, t).holds();
  bool ideals_semiprime = true;
  std::optional<std::string> bad_ideal;
  for (const Ideal& I : enumerate_ideals(R))
    if (!semiprimality(I).semiprime) {
      ideals_semiprime = false;
      bad_ideal = I.name();
      break;
    }
  const bool rhs = treg && ideals_semiprime;
  rep.status = regular == rhs ? AuditStatus::holds : AuditStatus::fails;
  rep.notes = "regular=" + bool_str(regular) + ", t_regular=" +
              bool_str(treg) + ", all ideals semiprime=" +
              bool_str(ideals_semiprime) +
              (bad_ideal ? " (witness " + *bad_ideal + ")" : "");
  if (rep.status == AuditStatus::fails)
    rep.witness = Json{{"regular", regular}, {"rhs", rhs}};
  return rep;
}

AuditReport audit_noeth_t_regular_implies_eps(const FiniteRing& R,
                                              std::uint32_t t) {
  AuditReport rep;
  rep.claim = "noeth_t_regular_implies_eps";
  rep.instance = ring_instance(R, t);
  const RegularityCertificate cert = is_t_regular(R, t);
  const EpsReducedReport eps = is_eps_reduced(regular_module(R), t);
  if (!cert.holds()) {
    rep.status = AuditStatus::hypothesis_not_met;
    rep.notes = "ring is not t-regular; conclusion computed anyway: "
                "eps_reduced=" +
                bool_str(eps.reduced);
    return rep;
  }
  rep.status = eps.reduced ? AuditStatus::holds : AuditStatus::fails;
  if (!eps.reduced)
    rep.witness = Json{{"failing_scalar", element_json(R, *eps.witness)}};
  return rep;
}

AuditReport audit_noeth_reduced_iff_eps(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "noeth_reduced_iff_eps";
  rep.instance = ring_instance(R, t);
  const PresentedModule M = regular_module(R);
  const EpsReducedReport red = is_reduced(M);
  const EpsReducedReport eps = is_eps_reduced(M, t);
  rep.status =
      red.reduced == eps.reduced ? AuditStatus::holds : AuditStatus::fails;
  rep.notes = "reduced=" + bool_str(red.reduced) + ", eps_reduced=" +
              bool_str(eps.reduced);
  if (rep.status == AuditStatus::fails) {
    Json w;
    w["reduced"] = red.reduced;
    w["eps_reduced"] = eps.reduced;
    if (red.witness)
      w["reduced_failing_scalar"] = element_json(R, *red.witness);
    rep.witness = w;
  }
  return rep;
}

AuditReport audit_noeth_t_regular_iff_reduced(const FiniteRing& R,
                                              std::uint32_t t) {
  AuditReport rep;
  rep.claim = "noeth_t_regular_iff_reduced";
  rep.instance = ring_instance(R, t);
  const RegularityCertificate cert = is_t_regular(R, t);
  const EpsReducedReport red = is_reduced(regular_module(R));
  rep.status =
      cert.holds() == red.reduced ? AuditStatus::holds : AuditStatus::fails;
  rep.notes = "t_regular=" + bool_str(cert.holds()) + ", reduced=" +
              bool_str(red.reduced) +
              "; regularity is decided at this instance's fixed exponent t; "
              "quantifying over every t instead would collapse the statement "
              "to the t=1 case";
  if (rep.status == AuditStatus::fails) {
    Json w;
    w["t_regular"] = cert.holds();
    w["reduced"] = red.reduced;
    if (red.witness) {
      w["nilpotency_witness"] = element_json(R, *red.witness);
      w["detail"] = "scalar " + R.element_str(*red.witness) +
                    " violates reducedness while every element has a "
                    "regularity witness";
    }
    if (cert.failing_a)
      w["regularity_failing_a"] = element_json(R, *cert.failing_a);
    rep.witness = w;
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& regularity_claim_ids() {
  static const std::vector<std::string> ids = {
      "quotient_closure",
      "domain_iff_field",
      "semiprime_implies_eps",
      "thm_all_modules",
      "regular_iff",
      "scalar_restriction",
      "cyclic_characterization",
      "faithful",
      "noeth_t_regular_implies_eps",
      "noeth_reduced_iff_eps",
      "noeth_t_regular_iff_reduced",
  };
  return ids;
}

namespace {

// Deterministic partner targets for homomorphism-based claims: the ring
// itself plus small plain residue rings.
std::vector<FiniteRing> hom_partners(const FiniteRing& R) {
  std::vector<FiniteRing> out;
  out.push_back(R);
  for (std::uint64_t m = 2; m <= std::min<std::uint64_t>(R.order(), 16); ++m)
    out.push_back(make_zn(m));
  return out;
}

AuditReport audit_scalar_restriction_impl(const FiniteRing& R,
                                          std::uint32_t t) {
  AuditReport rep;
  rep.claim = "scalar_restriction";
  rep.instance = ring_instance(R, t);
  rep.status = AuditStatus::holds;
  std::uint64_t homs_checked = 0;
  for (const FiniteRing& S : hom_partners(R)) {
    for (const RingHom& f : enumerate_ring_homs(R, S)) {
      std::vector<PresentedModule> mods;
      mods.push_back(regular_module(S));
      for (const Ideal& I : enumerate_ideals(S))
        if (!I.is_zero()) mods.push_back(cyclic_quotient(S, I));
      for (const PresentedModule& M : mods) {
        ++homs_checked;
        // eps-reducedness over S
        const bool over_s = is_eps_reduced(M, t).reduced;
        // eps-reducedness over R through f: a acts as f(a)
        bool over_r = true;
        std::vector<ModId> carrier(M.size());
        for (std::uint64_t i = 0; i < M.size(); ++i)
          carrier[i] = static_cast<ModId>(i);
        for (std::uint64_t a = 0; a < R.order() && over_r; ++a)
          over_r = at_reduced_within(
              M, carrier, f.apply_id(static_cast<ElemId>(a)), t);
        if (over_s && !over_r) {
          rep.status = AuditStatus::fails;
          rep.witness = Json{{"target", S.name()},
                             {"module_size", M.size()},
                             {"direction", "restriction"}};
          return rep;
        }
        if (f.surjective() && over_r && !over_s) {
          rep.status = AuditStatus::fails;
          rep.witness = Json{{"target", S.name()},
                             {"module_size", M.size()},
                             {"direction", "surjective_extension"}};
          return rep;
        }
      }
    }
  }
  rep.notes = "checked " + std::to_string(homs_checked) +
              " (hom, module) combinations";
  return rep;
}

AuditReport audit_cyclic_characterization_impl(const FiniteRing& R,
                                               std::uint32_t t) {
  AuditReport rep;
  rep.claim = "cyclic_characterization";
  rep.instance = ring_instance(R, t);
  rep.status = AuditStatus::holds;

  std::vector<PresentedModule> family;
  family.push_back(regular_module(R));
  for (const Ideal& I : enumerate_ideals(R))
    if (!I.is_zero()) family.push_back(cyclic_quotient(R, I));
  if (R.order() * R.order() <= max_enumerated_elements())
    family.push_back(module_present(R, 2, {}));

  for (const PresentedModule& M : family) {
    if (M.size() > 512) continue;  // keep the audit desk-scale
    const bool whole = is_eps_reduced(M, t).reduced;
    bool all_cyclic = true;
    std::vector<std::vector<ModId>> seen;
    for (std::uint64_t m = 0; m < M.size() && all_cyclic; ++m) {
      const Submodule N =
          submodule_generate_ids(M, {static_cast<ModId>(m)});
      bool dup = false;
      for (const auto& s : seen)
        if (s == N.ids()) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(N.ids());
      if (eps_violation_within(M, N.ids(), t)) all_cyclic = false;
    }
    if (whole != all_cyclic) {
      rep.status = AuditStatus::fails;
      rep.witness = Json{{"module_size", M.size()},
                         {"whole_eps", whole},
                         {"all_cyclic_eps", all_cyclic}};
      return rep;
    }
  }
  return rep;
}

AuditReport audit_faithful_impl(const FiniteRing& R, std::uint32_t t) {
  AuditReport rep;
  rep.claim = "faithful";
  rep.instance = ring_instance(R, t);
  rep.status = AuditStatus::holds;

  std::vector<PresentedModule> family;
  family.push_back(regular_module(R));
  for (const Ideal& I : enumerate_ideals(R))
    if (!I.is_zero()) family.push_back(cyclic_quotient(R, I));
  const bool rank2_ok =
      R.order() * R.order() <= max_enumerated_elements() && R.order() <= 16;
  if (rank2_ok) family.push_back(module_present(R, 2, {}));

  const PresentedModule RR = family.front();
  std::vector<ModId> ring_carrier(RR.size());
  for (std::uint64_t i = 0; i < RR.size(); ++i)
    ring_carrier[i] = static_cast<ModId>(i);

  for (std::uint64_t a = 0; a < R.order(); ++a) {
    const ElemId aid = static_cast<ElemId>(a);
    const bool ring_reduced = at_reduced_within(RR, ring_carrier, aid, t);
    bool exists_faithful = false;
    for (const PresentedModule& M : family) {
      if (!is_faithful(M).faithful) continue;
      std::vector<ModId> carrier(M.size());
      for (std::uint64_t i = 0; i < M.size(); ++i)
        carrier[i] = static_cast<ModId>(i);
      if (at_reduced_within(M, carrier, aid, t)) {
        exists_faithful = true;
        break;
      }
    }
    if (ring_reduced != exists_faithful) {
      rep.status = AuditStatus::fails;
      rep.witness =
          Json{{"a", element_json(R, R.element_at(aid))},
               {"ring_reduced", ring_reduced},
               {"faithful_reduced_module_exists", exists_faithful}};
      return rep;
    }
    // submodules of free modules of rank <= 2 must agree with the ring
    if (rank2_ok && ring_reduced) {
      const PresentedModule& F = family.back();
      std::vector<std::vector<ModId>> seen;
      for (std::uint64_t m = 0; m < F.size(); ++m) {
        const Submodule N =
            submodule_generate_ids(F, {static_cast<ModId>(m)});
        bool dup = false;
        for (const auto& s : seen)
          if (s == N.ids()) {
            dup = true;
            break;
          }
        if (dup) continue;
        seen.push_back(N.ids());
        if (!at_reduced_within(F, N.ids(), aid, t)) {
          rep.status = AuditStatus::fails;
          rep.witness = Json{
              {"a", element_json(R, R.element_at(aid))},
              {"detail", "a cyclic submodule of the rank-2 free module is "
                         "not reduced although the ring is"}};
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace

AuditReport claim_audit(const FiniteRing& R, std::uint32_t t,
                        const std::string& claim_id) {
  if (t < 1) throw BadConfig("claim audit requires t >= 1");
  if (claim_id == "quotient_closure") return audit_quotient_closure(R, t);
  if (claim_id == "domain_iff_field") return audit_domain_iff_field(R, t);
  if (claim_id == "semiprime_implies_eps")
    return audit_semiprime_implies_eps(R, t);
  if (claim_id == "thm_all_modules") return audit_thm_all_modules(R, t);
  if (claim_id == "regular_iff") return audit_regular_iff(R, t);
  if (claim_id == "scalar_restriction")
    return audit_scalar_restriction_impl(R, t);
  if (claim_id == "cyclic_characterization")
    return audit_cyclic_characterization_impl(R, t);
  if (claim_id == "faithful") return audit_faithful_impl(R, t);
  if (claim_id == "noeth_t_regular_implies_eps")
    return audit_noeth_t_regular_implies_eps(R, t);
  if (claim_id == "noeth_reduced_iff_eps")
    return audit_noeth_reduced_iff_eps(R, t);
  if (claim_id == "noeth_t_regular_iff_reduced")
    return audit_noeth_t_regular_iff_reduced(R, t);
  throw BadConfig("unknown claim id: " + claim_id);
}

}  // namespace redmod
