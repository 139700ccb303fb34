#include "redmod/torsion.hpp"

#include <algorithm>

namespace redmod {

namespace {

// Ascending annihilator chain (0:a) <= (0:a^2) <= ... within a carrier,
// up to and including the first repeated stage. Returns one sorted id set
// per exponent, so chain.back() is the a-torsion set of the carrier.
std::vector<std::vector<ModId>> ann_chain_within(
    const PresentedModule& M, const std::vector<ModId>& carrier, ElemId a) {
  std::vector<std::vector<ModId>> chain;
  // act[m] = a*m on the full module; carriers are closed under the action
  std::vector<ModId> act(M.size());
  for (std::uint64_t m = 0; m < M.size(); ++m)
    act[m] = M.scalar_id(a, static_cast<ModId>(m));

  std::vector<bool> in_prev(M.size(), false);
  std::vector<ModId> prev;  // stage k-1
  while (true) {
    std::vector<ModId> next;
    for (ModId m : carrier) {
      const ModId am = act[m];
      if (am == 0 || in_prev[am]) next.push_back(m);
    }
    if (next == prev) break;
    if (chain.size() > M.size())
      throw std::logic_error("annihilator chain failed to stabilize");
    for (ModId m : next) in_prev[m] = true;
    prev = std::move(next);
    chain.push_back(prev);
  }
  if (chain.empty()) chain.push_back({0});  // a acts injectively
  return chain;
}

std::vector<ModId> apply_power(const PresentedModule& M,
                               const std::vector<ModId>& set, ElemId a,
                               std::uint32_t t) {
  const ElemId at = M.ring().pow_id(a, t);
  std::vector<ModId> out;
  out.reserve(set.size());
  for (ModId m : set) out.push_back(M.scalar_id(at, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ModId> full_carrier(const PresentedModule& M) {
  std::vector<ModId> ids(M.size());
  for (std::uint64_t m = 0; m < M.size(); ++m) ids[m] = static_cast<ModId>(m);
  return ids;
}

bool is_zero_set(const std::vector<ModId>& ids) {
  return ids.size() == 1 && ids[0] == 0;
}

// Definitional scan: find (m, k) with a^k m = 0, k >= t, a^t m != 0.
// Exponents run from 1 to max(stabilization, t); past stabilization the
// annihilator chain is constant, so nothing new can vanish.
std::optional<std::pair<ModId, std::uint32_t>> definitional_violation(
    const PresentedModule& M, const std::vector<ModId>& carrier, ElemId a,
    std::uint32_t t, std::uint32_t stabilization) {
  const std::uint32_t k_max = std::max(stabilization, t);
  const ElemId at = M.ring().pow_id(a, t);
  for (ModId m : carrier) {
    if (M.scalar_id(at, m) == 0) continue;
    ModId x = m;
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      x = M.scalar_id(a, x);
      if (x == 0 && k >= t) return std::make_pair(m, k);
      if (x == 0) break;  // vanished below t, so a^t m = 0 too; unreachable
    }
  }
  return std::nullopt;
}

}  // namespace

Submodule gamma(const PresentedModule& M, const RingElement& a) {
  const auto chain = ann_chain_within(M, full_carrier(M), M.ring().index_of(a));
  return Submodule(M, chain.back());
}

Submodule gln(const PresentedModule& M, const RingElement& a,
              std::uint32_t t) {
  if (t < 1) throw BadConfig("gln requires t >= 1");
  const ElemId aid = M.ring().index_of(a);
  const auto chain = ann_chain_within(M, full_carrier(M), aid);
  return Submodule(M, apply_power(M, chain.back(), aid, t));
}

std::vector<ModId> gamma_ids_within(const PresentedModule& M,
                                    const std::vector<ModId>& carrier,
                                    ElemId a) {
  return ann_chain_within(M, carrier, a).back();
}

std::vector<ModId> gln_ids_within(const PresentedModule& M,
                                  const std::vector<ModId>& carrier, ElemId a,
                                  std::uint32_t t) {
  if (t < 1) throw BadConfig("gln requires t >= 1");
  return apply_power(M, gamma_ids_within(M, carrier, a), a, t);
}

Submodule gln_of_submodule(const Submodule& N, const RingElement& a,
                           std::uint32_t t) {
  return Submodule(N.parent(),
                   gln_ids_within(N.parent(), N.ids(),
                                  N.parent().ring().index_of(a), t));
}

bool at_reduced_within(const PresentedModule& M,
                       const std::vector<ModId>& carrier, ElemId a,
                       std::uint32_t t) {
  const auto chain = ann_chain_within(M, carrier, a);
  const bool by_gln = is_zero_set(apply_power(M, chain.back(), a, t));
  const auto violation = definitional_violation(
      M, carrier, a, t, static_cast<std::uint32_t>(chain.size()));
  if (by_gln != !violation.has_value())
    throw std::logic_error("gln route disagrees with definitional route");
  return by_gln;
}

AtReducedReport is_at_reduced(const PresentedModule& M, const RingElement& a,
                              std::uint32_t t) {
  if (t < 1) throw BadConfig("reducedness requires t >= 1");
  const ElemId aid = M.ring().index_of(a);
  const auto carrier = full_carrier(M);
  const auto chain = ann_chain_within(M, carrier, aid);
  const bool by_gln = is_zero_set(apply_power(M, chain.back(), aid, t));
  const auto violation = definitional_violation(
      M, carrier, aid, t, static_cast<std::uint32_t>(chain.size()));
  if (by_gln != !violation.has_value())
    throw std::logic_error("gln route disagrees with definitional route");
  AtReducedReport out;
  out.reduced = by_gln;
  if (violation)
    out.witness = std::make_pair(M.element_at(violation->first),
                                 violation->second);
  return out;
}

EpsReducedReport is_eps_reduced(const PresentedModule& M, std::uint32_t t) {
  if (t < 1) throw BadConfig("reducedness requires t >= 1");
  EpsReducedReport out;
  const auto carrier = full_carrier(M);
  for (std::uint64_t a = 0; a < M.ring().order(); ++a)
    if (!at_reduced_within(M, carrier, static_cast<ElemId>(a), t)) {
      out.reduced = false;
      out.witness = M.ring().element_at(static_cast<ElemId>(a));
      return out;
    }
  out.reduced = true;
  return out;
}

std::optional<ElemId> eps_violation_within(const PresentedModule& M,
                                           const std::vector<ModId>& carrier,
                                           std::uint32_t t) {
  for (std::uint64_t a = 0; a < M.ring().order(); ++a)
    if (!at_reduced_within(M, carrier, static_cast<ElemId>(a), t))
      return static_cast<ElemId>(a);
  return std::nullopt;
}

std::vector<ReducednessReport> verify_equivalences_sweep(
    const PresentedModule& M, const RingElement& a,
    const std::vector<std::uint32_t>& ts) {
  const FiniteRing& R = M.ring();
  const ElemId aid = R.index_of(a);
  const auto carrier = full_carrier(M);
  const auto chain = ann_chain_within(M, carrier, aid);
  const std::uint32_t stab = static_cast<std::uint32_t>(chain.size());
  const std::vector<ModId>& torsion = chain.back();

  auto ann_at = [&](std::uint32_t k) -> const std::vector<ModId>& {
    return chain[std::min<std::size_t>(k, stab) - 1];
  };

  // Hom(R/(a)^k, M) enumerations, shared across the sweep. Each hom of a
  // cyclic source is determined by its value at the generator coset.
  std::vector<std::optional<std::pair<std::uint64_t, std::vector<ModId>>>>
      hom_data;                    // per k: (count, sorted eval image)
  const Ideal principal = ideal_generate(R, {a});
  auto hom_at =
      [&](std::uint32_t k) -> const std::pair<std::uint64_t,
                                              std::vector<ModId>>& {
    if (hom_data.size() < k) hom_data.resize(k);
    if (!hom_data[k - 1]) {
      const PresentedModule source =
          cyclic_quotient(R, ideal_power(principal, k));
      const ModuleElement gen = source.project(ModVec{R.one()});
      const ModId gen_id = source.index_of(gen);
      std::vector<ModId> evals;
      for (const ModuleHom& f : hom_set(source, M))
        evals.push_back(f.apply_id(gen_id));
      std::sort(evals.begin(), evals.end());
      hom_data[k - 1] = std::make_pair(evals.size(), std::move(evals));
    }
    return *hom_data[k - 1];
  };

  std::vector<ReducednessReport> out;
  for (std::uint32_t t : ts) {
    if (t < 1) throw BadConfig("reducedness requires t >= 1");
    ReducednessReport rep;
    rep.scalar = a;
    rep.t = t;
    rep.module_size = M.size();
    rep.stabilization_index = stab;

    const auto violation = definitional_violation(M, carrier, aid, t, stab);
    rep.definitional = !violation.has_value();
    if (violation)
      rep.witness = M.element_at(violation->first);

    const auto gln_set = apply_power(M, torsion, aid, t);
    rep.gln_zero = is_zero_set(gln_set);
    if (!rep.witness && !rep.gln_zero) {
      for (ModId m : gln_set)
        if (m != 0) {
          rep.witness = M.element_at(m);
          break;
        }
    }

    const std::uint32_t k_max = std::max(stab, t + 1);
    rep.ann_stabilizes = true;
    for (std::uint32_t k = t; k <= k_max; ++k)
      if (ann_at(k) != ann_at(t)) {
        rep.ann_stabilizes = false;
        break;
      }

    rep.hom_card_matches = true;
    const std::uint64_t base_count = hom_at(t).first;
    for (std::uint32_t k = t; k <= k_max; ++k)
      if (hom_at(k).first != base_count) {
        rep.hom_card_matches = false;
        break;
      }

    // evaluation map f -> f(1) must land exactly on the torsion submodule
    rep.hom_limit_matches = hom_at(t).second == torsion;

    // kernel of multiplication by a^t, recomputed by direct scan
    std::vector<ModId> kernel;
    {
      const ElemId at = R.pow_id(aid, t);
      for (ModId m : carrier)
        if (M.scalar_id(at, m) == 0) kernel.push_back(m);
    }
    rep.gamma_equals_ann_t = kernel == torsion;

    // exactness of 0 -> Gamma -> M -> a^t M -> 0: the image is the scalar
    // image by construction; content is kernel = Gamma plus the size law
    {
      const auto image = apply_power(M, carrier, aid, t);
      const bool sizes_ok =
          M.size() == static_cast<std::uint64_t>(kernel.size()) * image.size();
      rep.sequence_exact = (kernel == torsion) && sizes_ok;
    }

    rep.consistent = rep.definitional == rep.gln_zero &&
                     rep.definitional == rep.ann_stabilizes &&
                     rep.definitional == rep.hom_card_matches &&
                     rep.definitional == rep.hom_limit_matches &&
                     rep.definitional == rep.gamma_equals_ann_t &&
                     rep.definitional == rep.sequence_exact;
    out.push_back(std::move(rep));
  }
  return out;
}

ReducednessReport verify_equivalences(const PresentedModule& M,
                                      const RingElement& a, std::uint32_t t) {
  return verify_equivalences_sweep(M, a, {t}).front();
}

StratifyReport stratify_audit(const FiniteRing& R) {
  const PresentedModule M = regular_module(R);
  const std::vector<ModId> carrier = full_carrier(M);
  std::vector<bool> in_union(R.order(), false);
  for (std::uint64_t a = 0; a < R.order(); ++a)
    for (ModId m : gln_ids_within(M, carrier, static_cast<ElemId>(a), 1))
      in_union[M.coord_id(m, 0)] = true;

  StratifyReport out;
  const Ideal nil = nilradical(R);
  std::vector<ElemId> union_ids;
  for (std::uint64_t i = 0; i < R.order(); ++i)
    if (in_union[i]) union_ids.push_back(static_cast<ElemId>(i));
  out.matches = union_ids == nil.element_ids();
  for (ElemId id : union_ids) out.union_strata.push_back(R.element_at(id));
  out.nilpotents = nil.elements();
  return out;
}

namespace {

// Everything the functor audit needs that does not depend on the scalar or
// the exponent: the sampled submodule family with its factor quotients and
// projections, the partner hom sets, and the automorphism tables.
struct FunctorContext {
  PresentedModule M;
  PresentedModule RR;  // the ring as a module over itself
  std::vector<PresentedModule> partners;
  std::vector<std::vector<std::vector<ModId>>> partner_homs;
  std::vector<std::vector<ModId>> automorphisms;
  std::vector<std::vector<ModId>> family;
  std::vector<PresentedModule> factor_quotients;
  std::vector<std::vector<ModId>> factor_proj;  // M dense id -> Q dense id
  std::vector<std::string> static_notes;
};

// Full hom verification is quadratic per map; skip enumerations whose total
// cost would dwarf the audit.
bool hom_budget_ok(const PresentedModule& M, const PresentedModule& N) {
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < M.generator_count(); ++i) {
    assignments *= N.size();
    if (assignments > 4096) return false;
  }
  const std::uint64_t per_hom =
      M.size() * M.size() + M.ring().order() * M.size();
  return assignments * per_hom <= (1ull << 24);
}

FunctorContext build_functor_context(
    const PresentedModule& M, const std::vector<PresentedModule>& partners) {
  FunctorContext ctx{M,  regular_module(M.ring()), partners, {}, {}, {}, {},
                     {}, {}};
  const FiniteRing& R = M.ring();

  for (const PresentedModule& N : ctx.partners) {
    std::vector<std::vector<ModId>> tables;
    if (!hom_budget_ok(M, N)) {
      ctx.static_notes.push_back("hom budget exceeded for a partner; skipped");
    } else {
      for (const ModuleHom& f : hom_set(M, N)) {
        std::vector<ModId> table(M.size());
        for (std::uint64_t m = 0; m < M.size(); ++m)
          table[m] = f.apply_id(static_cast<ModId>(m));
        tables.push_back(std::move(table));
      }
    }
    ctx.partner_homs.push_back(std::move(tables));
  }

  if (!hom_budget_ok(M, M)) {
    ctx.static_notes.push_back(
        "endomorphism budget exceeded; automorphism check skipped");
  } else {
    for (const ModuleHom& f : hom_set(M, M)) {
      if (!f.is_automorphism()) continue;
      std::vector<ModId> table(M.size());
      for (std::uint64_t m = 0; m < M.size(); ++m)
        table[m] = f.apply_id(static_cast<ModId>(m));
      ctx.automorphisms.push_back(std::move(table));
    }
  }

  // sampled submodule family: all cyclic submodules plus all scalar-map
  // kernels
  auto add_family = [&](std::vector<ModId> ids) {
    for (const auto& f : ctx.family)
      if (f == ids) return;
    ctx.family.push_back(std::move(ids));
  };
  for (std::uint64_t m = 0; m < M.size(); ++m)
    add_family(submodule_generate_ids(M, {static_cast<ModId>(m)}).ids());
  for (std::uint64_t r = 0; r < R.order(); ++r) {
    std::vector<ModId> ker;
    for (std::uint64_t m = 0; m < M.size(); ++m)
      if (M.scalar_id(static_cast<ElemId>(r), static_cast<ModId>(m)) == 0)
        ker.push_back(static_cast<ModId>(m));
    add_family(std::move(ker));
  }

  for (const auto& ids : ctx.family) {
    const Submodule N(M, ids);
    PresentedModule Q = quotient_module(M, N);
    std::vector<ModId> proj(M.size());
    for (std::uint64_t m = 0; m < M.size(); ++m)
      proj[m] =
          Q.index_of(Q.project(M.element_at(static_cast<ModId>(m)).rep()));
    ctx.factor_quotients.push_back(std::move(Q));
    ctx.factor_proj.push_back(std::move(proj));
  }
  return ctx;
}

FunctorAuditReport functor_eval(const FunctorContext& ctx, ElemId aid,
                                std::uint32_t t) {
  if (t < 1) throw BadConfig("functor audit requires t >= 1");
  FunctorAuditReport out;
  const PresentedModule& M = ctx.M;
  out.notes = ctx.static_notes;

  const std::vector<ModId> gln_m = gln_ids_within(M, full_carrier(M), aid, t);

  out.preradical_ok = true;
  for (std::size_t p = 0; p < ctx.partners.size(); ++p) {
    if (ctx.partner_homs[p].empty()) continue;  // skipped by the hom budget
    const PresentedModule& N = ctx.partners[p];
    std::vector<bool> in_gln_n(N.size(), false);
    for (ModId m : gln_ids_within(N, full_carrier(N), aid, t))
      in_gln_n[m] = true;
    for (const auto& table : ctx.partner_homs[p])
      for (ModId m : gln_m)
        if (!in_gln_n[table[m]]) {
          out.preradical_ok = false;
          out.notes.push_back("image of gln escaped under a homomorphism");
          break;
        }
  }

  // radical: gln of the quotient by gln vanishes; trivial when gln is 0
  if (is_zero_set(gln_m)) {
    out.radical_ok = true;
  } else {
    const PresentedModule Q = quotient_module(M, Submodule(M, gln_m));
    out.radical_ok = is_zero_set(gln_ids_within(Q, full_carrier(Q), aid, t));
  }

  out.characteristic_ok = true;
  for (const auto& table : ctx.automorphisms)
    for (ModId m : gln_m)
      if (!std::binary_search(gln_m.begin(), gln_m.end(), table[m])) {
        out.characteristic_ok = false;
        break;
      }

  out.factor_ok = true;
  for (std::size_t i = 0; i < ctx.family.size(); ++i) {
    const auto& ids = ctx.family[i];
    const auto gln_n = gln_ids_within(M, ids, aid, t);
    std::vector<ModId> meet;
    std::set_intersection(ids.begin(), ids.end(), gln_m.begin(), gln_m.end(),
                          std::back_inserter(meet));
    if (!std::includes(meet.begin(), meet.end(), gln_n.begin(), gln_n.end())) {
      out.factor_ok = false;
      break;
    }
    if (gln_n.size() < meet.size()) out.factor_strict = true;

    const PresentedModule& Q = ctx.factor_quotients[i];
    const auto& proj = ctx.factor_proj[i];
    std::vector<ModId> gln_q = gln_ids_within(Q, full_carrier(Q), aid, t);
    for (ModId m : gln_m)
      if (!std::binary_search(gln_q.begin(), gln_q.end(), proj[m])) {
        out.factor_ok = false;
        break;
      }
    if (!out.factor_ok) break;
  }
  if (out.factor_strict)
    out.notes.push_back(
        "strict containment gln(N) < N meet gln(M) observed (expected; the "
        "functor is not left exact)");

  // ideal action: gln(R) M inside gln(M); equality on free modules of rank
  // <= 2
  {
    const auto gln_r = gln_ids_within(ctx.RR, full_carrier(ctx.RR), aid, t);
    std::vector<ModId> seeds;
    for (ModId e : gln_r)
      for (std::uint64_t m = 0; m < M.size(); ++m)
        seeds.push_back(
            M.scalar_id(ctx.RR.coord_id(e, 0), static_cast<ModId>(m)));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    const Submodule product = submodule_generate_ids(M, seeds);
    out.ideal_action_ok =
        std::includes(gln_m.begin(), gln_m.end(), product.ids().begin(),
                      product.ids().end());
    if (M.is_free() && M.generator_count() <= 2 && product.ids() != gln_m) {
      out.ideal_action_ok = false;
      out.notes.push_back("gln(R)M differs from gln(M) on a free module");
    }
  }

  // composition: t-fold iterate of the exponent-1 functor
  {
    std::vector<ModId> c = full_carrier(M);
    for (std::uint32_t step = 0; step < t; ++step)
      c = gln_ids_within(M, c, aid, 1);
    out.composition_ok = c == gln_m;
  }

  return out;
}

std::vector<PresentedModule> default_partners(const PresentedModule& M) {
  const FiniteRing& R = M.ring();
  std::vector<PresentedModule> partners;
  partners.push_back(regular_module(R));
  partners.push_back(M);
  partners.push_back(cyclic_quotient(R, nilradical(R)));
  return partners;
}

}  // namespace

FunctorAuditReport functor_audit(const PresentedModule& M,
                                 const RingElement& a, std::uint32_t t) {
  return functor_audit(M, a, t, default_partners(M));
}

FunctorAuditReport functor_audit(const PresentedModule& M,
                                 const RingElement& a, std::uint32_t t,
                                 const std::vector<PresentedModule>& partners) {
  const FunctorContext ctx = build_functor_context(M, partners);
  return functor_eval(ctx, M.ring().index_of(a), t);
}

std::vector<FunctorAuditReport> functor_audit_sweep(
    const PresentedModule& M, const std::vector<ElemId>& scalars,
    const std::vector<std::uint32_t>& ts) {
  const FunctorContext ctx = build_functor_context(M, default_partners(M));
  std::vector<FunctorAuditReport> out;
  for (ElemId a : scalars)
    for (std::uint32_t t : ts) out.push_back(functor_eval(ctx, a, t));
  return out;
}

SumAuditReport sum_audit(const std::vector<PresentedModule>& parts,
                         const RingElement& a, std::uint32_t t) {
  if (t < 1) throw BadConfig("sum audit requires t >= 1");
  SumAuditReport out;
  const PresentedModule S = direct_sum(parts);
  const ElemId aid = S.ring().index_of(a);
  const auto gln_s = gln_ids_within(S, full_carrier(S), aid, t);

  // componentwise gln, combined through the sum's presentation
  std::vector<std::vector<std::vector<RingElement>>> part_reps;
  for (const PresentedModule& p : parts) {
    std::vector<std::vector<RingElement>> reps;
    for (ModId m : gln_ids_within(p, full_carrier(p), aid, t))
      reps.push_back(p.element_at(m).rep());
    part_reps.push_back(std::move(reps));
  }
  std::vector<ModId> combined;
  std::vector<std::size_t> pick(parts.size(), 0);
  while (true) {
    ModVec raw;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (const RingElement& c : part_reps[i][pick[i]]) raw.push_back(c);
    combined.push_back(S.index_of(S.project(raw)));
    std::size_t i = parts.size();
    bool done = true;
    while (i-- > 0) {
      if (++pick[i] < part_reps[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  std::sort(combined.begin(), combined.end());
  combined.erase(std::unique(combined.begin(), combined.end()),
                 combined.end());

  out.additive = combined == gln_s;
  out.sum_gln_size = gln_s.size();
  out.note =
      "finite index set: the product containment coincides with the sum "
      "identity";
  return out;
}

}  // namespace redmod
