#include "rihull/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "rihull/bp.hpp"
#include "rihull/embedding.hpp"
#include "rihull/errors.hpp"
#include "rihull/generators.hpp"
#include "rihull/hull.hpp"
#include "rihull/inequalities.hpp"
#include "rihull/mpt.hpp"
#include "rihull/oracle.hpp"
#include "rihull/rearrangement.hpp"

namespace rihull {

namespace {

class Stopwatch {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void fail(CriterionResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < 16) r.notes.push_back(what);
}

void note(CriterionResult& r, const std::string& text) {
  if (r.notes.size() < 64) r.notes.push_back(text);
}

// Interior sample point per piece (pieces are open and nonempty).
std::vector<Rat> interior_samples(const StepFunction& f) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Interval iv = f.piece(i);
    if (iv.lo && iv.hi)
      out.push_back((*iv.lo + *iv.hi) / Rat(2));
    else if (iv.lo)
      out.push_back(*iv.lo + Rat(1));
    else if (iv.hi)
      out.push_back(*iv.hi - Rat(1));
  }
  return out;
}

bool rel_close(double exact, double got, double tol) {
  return std::abs(exact - got) <= tol * std::max(std::abs(exact), 1e-6);
}

StepFunction force_positive_tails(Rng& rng, const StepFunction& d) {
  std::vector<ExtScalar> dv = d.values();
  if (!d.domain().lo && dv.front().is_zero()) dv.front() = ExtScalar(random_rat(rng));
  if (!d.domain().hi && dv.back().is_zero()) dv.back() = ExtScalar(random_rat(rng));
  return StepFunction(d.domain(), d.breaks(), std::move(dv));
}

}  // namespace

CriterionResult verify_rearrangement_axioms(std::uint64_t seed, std::size_t cases) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "rearrangement-axioms";
  Rng rng(seed);
  std::size_t infinite_spaces = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng);
      if (sp.total().is_inf()) ++infinite_spaces;
      StepOptions fo;
      fo.zero_tails = draw(rng, 2) == 0;
      StepFunction f = random_step(rng, sp.domain(), fo);
      StepFunction mu_f = distribution(f, sp);
      StepFunction kappa = lower_distribution(f, sp);
      StepFunction fstar = decreasing_rearrangement(f, sp);
      StepFunction flow = increasing_rearrangement(f, sp);

      if (!mu_f.is_nonincreasing() || !kappa.is_nondecreasing() || !fstar.is_nonincreasing() ||
          !flow.is_nondecreasing())
        fail(r, "monotonicity of distribution or rearrangement broken");

      if (!equimeasurable(f, sp, fstar, WeightedSpace::lebesgue(fstar.domain())))
        fail(r, "f and its nonincreasing rearrangement disagree in distribution");

      for (const Rat& t : interior_samples(flow)) {
        ExtScalar by_sup = sup_formula_at(kappa, t);
        ExtScalar by_inf = inf_formula_at(kappa, t);
        if (!(by_sup == by_inf) || !(by_sup == flow.value_at(t))) {
          fail(r, "pointwise formulas disagree with the nondecreasing layout");
          break;
        }
      }
      for (const Rat& t : interior_samples(fstar)) {
        if (!(dec_inf_formula_at(mu_f, t) == fstar.value_at(t))) {
          fail(r, "pointwise formula disagrees with the nonincreasing layout");
          break;
        }
      }

      if (sp.total().is_finite()) {
        if (!finite_space_duality_check(f, sp)) fail(r, "finite-space reflection identity broken");
        if (!flow.value_at(sp.total().finite() + Rat(1)).is_inf())
          fail(r, "nondecreasing rearrangement must be inf past the total mass");
      }
      ExtScalar zero_mass =
          sp.measure(level_set(f, [](const ExtScalar& v) { return v.is_zero(); }));
      if (zero_mass.is_inf() && !flow.is_zero())
        fail(r, "infinite zero set must force the nondecreasing rearrangement to 0");

      // domination: f <= f + h
      StepFunction g = StepFunction::add(f, random_step(rng, sp.domain(), StepOptions{}));
      if (!StepFunction::le_ae(fstar, decreasing_rearrangement(g, sp)))
        fail(r, "nonincreasing rearrangement not monotone under domination");
      if (!StepFunction::le_ae(flow, increasing_rearrangement(g, sp)))
        fail(r, "nondecreasing rearrangement not monotone under domination");
      if (!StepFunction::le_ae(lower_distribution(g, sp), kappa))
        fail(r, "lower distribution not antitone under domination");

      // restriction raises the nondecreasing rearrangement
      Rat a = random_rat(rng, 200, 20) - Rat(100);
      WeightedSpace spr = sp.restricted({Interval(a, a + random_rat(rng, 200, 20))});
      if (!spr.total().is_zero()) {
        if (!StepFunction::le_ae(flow, increasing_rearrangement(f, spr)))
          fail(r, "restriction must not lower the nondecreasing rearrangement");
      }

      if (!layer_cake_check(f, sp)) fail(r, "layer cake identity broken");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  note(r, "infinite-measure spaces: " + std::to_string(infinite_spaces));
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_monotone_chains(std::uint64_t seed, std::size_t chains) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "monotone-chains";
  Rng rng(seed);
  for (std::size_t i = 0; i < chains; ++i) {
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng);
      StepFunction f = random_step(rng, sp.domain(), StepOptions{});
      StepFunction h = random_step(rng, sp.domain(), StepOptions{});
      std::size_t n = 2 + draw(rng, 5);  // chain length 2..6
      std::vector<StepFunction> chain;
      for (std::size_t k = 0; k < n; ++k)
        chain.push_back(StepFunction::add(
            f, h.scale_values(Rat(static_cast<long>(n - 1 - k), static_cast<long>(n - 1)))));

      StepFunction kappa_limit = lower_distribution(f, sp);
      StepFunction flow_limit = increasing_rearrangement(f, sp);
      StepFunction prev_kappa = lower_distribution(chain[0], sp);
      StepFunction prev_flow = increasing_rearrangement(chain[0], sp);
      for (std::size_t k = 1; k < n; ++k) {
        if (!StepFunction::le_ae(chain[k], chain[k - 1])) fail(r, "chain is not decreasing");
        StepFunction kappa_k = lower_distribution(chain[k], sp);
        StepFunction flow_k = increasing_rearrangement(chain[k], sp);
        if (!StepFunction::le_ae(prev_kappa, kappa_k))
          fail(r, "lower distributions must ascend along the chain");
        if (!StepFunction::le_ae(kappa_k, kappa_limit))
          fail(r, "lower distributions must stay below the limit");
        if (!StepFunction::le_ae(flow_k, prev_flow))
          fail(r, "nondecreasing rearrangements must descend along the chain");
        if (!StepFunction::le_ae(flow_limit, flow_k))
          fail(r, "nondecreasing rearrangements must stay above the limit");
        prev_kappa = std::move(kappa_k);
        prev_flow = std::move(flow_k);
      }
      if (!(prev_kappa == kappa_limit)) fail(r, "terminal lower distribution must equal the limit");
      if (!(prev_flow == flow_limit)) fail(r, "terminal rearrangement must equal the limit");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_transform_construction(std::uint64_t seed, std::size_t cases) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "transform-construction";
  Rng rng(seed);
  std::size_t full = 0, impossible = 0, reverse_built = 0, reverse_skipped = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      bool want_neither = (i % 2) == 1;
      SpaceAndFunction inst =
          want_neither ? random_neither_instance(rng) : random_cond_i_instance(rng);
      const WeightedSpace& sp = inst.space;
      const StepFunction& f = inst.f;
      RyffVerdict verdict = ryff_conditions(f, sp);

      if (verdict.tag == RyffCase::Neither) {
        ++impossible;
        if (!want_neither) {
          fail(r, "generator promised a representable instance");
          continue;
        }
        const Rat& s = *verdict.witness;
        StepFunction flow = increasing_rearrangement(f, sp);
        for (const auto& val : flow.values())
          if (!(val < ExtScalar(s))) {
            fail(r, "certificate level must dominate the nondecreasing rearrangement");
            break;
          }
        ExtScalar above =
            sp.measure(level_set(f, [&](const ExtScalar& v) { return v >= ExtScalar(s); }));
        if (!(above > ExtScalar(Rat(0)))) fail(r, "certificate level must carry mass above it");
        bool threw = false;
        try {
          build_increasing_mpt(f, sp);
        } catch (const ryff_neither&) {
          threw = true;
        }
        if (!threw) fail(r, "construction must refuse an impossible instance");
      } else {
        ++full;
        if (want_neither) {
          fail(r, "generator promised an impossible instance");
          continue;
        }
        MPTransform sigma = build_increasing_mpt(f, sp);
        MptCheck ck = verify_mpt(sigma, sp);
        if (!ck.ok) fail(r, "transform check: " + ck.diagnostic);
        StepFunction composed =
            compose_with_rearrangement(increasing_rearrangement(f, sp), sigma);
        if (!equal_mu_ae(f, composed, sp))
          fail(r, "composition with the nondecreasing rearrangement must reproduce f");
      }

      if (distribution(f, sp).all_finite()) {
        try {
          MPTransform down = build_decreasing_mpt(f, sp);
          MptCheck ck = verify_mpt(down, sp);
          if (!ck.ok) fail(r, "reverse transform check: " + ck.diagnostic);
          StepFunction composed =
              compose_with_rearrangement(decreasing_rearrangement(f, sp), down);
          if (!equal_mu_ae(f, composed, sp))
            fail(r, "composition with the nonincreasing rearrangement must reproduce f");
          ++reverse_built;
        } catch (const mpt_unrepresentable&) {
          ++reverse_skipped;  // two unbounded zero runs: no finite affine realization
        }
      }
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  note(r, "value-ordered maps built: " + std::to_string(full));
  note(r, "impossibility certified: " + std::to_string(impossible));
  note(r, "reverse maps built: " + std::to_string(reverse_built) +
              ", unrepresentable: " + std::to_string(reverse_skipped));
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_reverse_inequality(std::uint64_t seed, std::size_t cases) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "reverse-inequality";
  Rng rng(seed);
  std::size_t infinite_spaces = 0, equalities = 0, chains = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng);
      if (sp.total().is_inf()) ++infinite_spaces;
      StepFunction f = random_step(rng, sp.domain(), StepOptions{});
      StepFunction g = random_step(rng, sp.domain(), StepOptions{});
      if (!reverse_hardy_littlewood(f, g, sp).holds) fail(r, "reverse inequality broken");
      if (!hardy_littlewood(f, g, sp).holds) fail(r, "forward inequality broken");
      if (!hl_sandwich(f, g, sp).holds) fail(r, "two-sided pairing bound broken");

      if (i % 5 == 0) {
        WeightedSpace spf = random_space(rng, static_cast<DomainKind>(draw(rng, 3)), true);
        StepFunction one = StepFunction::constant(spf.domain(), ExtScalar(Rat(1)));
        StepFunction g2 = random_step(rng, spf.domain(), StepOptions{});
        InequalityReport rep = reverse_hardy_littlewood(one, g2, spf);
        if (!rep.holds || !(rep.lhs == rep.rhs))
          fail(r, "constant-one specialization must be an equality on finite spaces");
        ++equalities;
      }
      if (i % 5 == 1) {
        auto layers = random_nested_layers(rng, sp);
        ChainReport ch = reverse_hl_simple_chain(layers, g, sp);
        if (!ch.holds) fail(r, "nested chain ordering broken");
        if (!(ch.middle == ch.rhs)) fail(r, "nested chain middle step must be an equality");
        ++chains;
      }
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  note(r, "infinite-measure spaces: " + std::to_string(infinite_spaces));
  note(r, "constant-one equalities: " + std::to_string(equalities) +
              ", nested chains: " + std::to_string(chains));
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_embedding_campaign(std::uint64_t seed, std::size_t cases) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "embedding-constant";
  Rng rng(seed);
  const std::vector<Rat> ps = {Rat(2), Rat(3, 2), Rat(3)};
  for (std::size_t i = 0; i < cases; ++i) {
    try {
      TwoMeasures m = random_abs_continuous_pair(rng, draw(rng, 2) == 0);
      std::vector<StepFunction> samples;
      for (int k = 0; k < 3; ++k) {
        StepOptions so;
        so.zero_tails = draw(rng, 2) == 0;
        samples.push_back(random_step(rng, m.domain, so));
      }
      for (const Rat& p : ps) {
        ++r.cases;
        EmbeddingResult res = embedding_constant(m, p);
        if (p == Rat(3)) {
          double got = bathtub_search(m, p, 100000);
          if (!rel_close(res.A.to_double(), got, 1e-9))
            fail(r, "set search disagrees with the closed form beyond 1e-9");
        } else {
          Rat exact_bath = bathtub_search_exact(m, p);
          if (!res.A_pow_pprime.is_exact() ||
              !(res.A_pow_pprime.exact() == ExtScalar(exact_bath)))
            fail(r, "exact set search must equal the closed form");
          double got = bathtub_search(m, p, 100000);
          if (!rel_close(res.A.to_double(), got, 1e-9))
            fail(r, "floating set search disagrees beyond 1e-9");
        }
        EmbeddingVerification ver = verify_embedding_norm(m, p, samples);
        if (!ver.all_samples_ok) fail(r, "norm inequality failed on a sample");
        if (!ver.extremal_attains) fail(r, "extremal candidate fell short of the constant");
      }
    } catch (const std::exception& e) {
      ++r.cases;
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_hull_campaign(std::uint64_t seed, std::size_t lower_cases,
                                     std::size_t witness_target) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "hull-theorem";
  Rng rng(seed);
  const std::vector<Rat> ps = {Rat(1), Rat(2), Rat(3)};

  for (std::size_t i = 0; i < lower_cases; ++i) {
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng);
      StepFunction v = random_step(rng, sp.domain(), StepOptions{});
      HullInstance inst(sp, v, ps[draw(rng, ps.size())]);
      StepOptions fo;
      fo.zero_tails = draw(rng, 2) == 0;
      StepFunction f = random_step(rng, sp.domain(), fo);
      if (!hull_lower_bound(f, inst).holds) fail(r, "lower bound broken");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  std::size_t produced = 0, eps_zero = 0, general = 0, zero_route = 0, tail_route = 0;
  std::size_t attempts = 0;
  const std::size_t max_attempts = witness_target * 40;
  while (produced < witness_target && attempts < max_attempts) {
    ++attempts;
    std::size_t shape = produced % 4;
    const Rat& p = ps[attempts % ps.size()];
    try {
      if (shape == 0) {  // exact witness, epsilon = 0
        SpaceAndFunction sf = random_cond_i_instance(rng);
        HullInstance inst(sf.space, sf.f, p);
        if (inst.T.is_zero() || inst.vstar_zero) continue;
        ExtScalar tot = sf.space.total();
        Rat mass = tot.is_finite() ? tot.finite() * Rat(1 + static_cast<long>(draw(rng, 9)), 10)
                                   : random_rat(rng, 200, 20);
        StepFunction g = random_profile(rng, mass);
        WitnessReport rep = hull_witness(g, inst, Rat(0));
        ++r.cases;
        if (rep.tag != HullCase::EpsilonZero) fail(r, "expected the exact branch");
        if (!rep.equimeasurable_with_g) fail(r, "witness not equimeasurable (exact branch)");
        if (!rep.sandwich_holds) fail(r, "exact branch must give equality of the functionals");
        ++produced;
        ++eps_zero;
      } else if (shape == 1) {  // general witness, epsilon = 1/10
        WeightedSpace sp = random_space(rng);
        StepOptions vo;
        vo.ensure_positive = true;
        StepFunction v = random_step(rng, sp.domain(), vo);
        HullInstance inst(sp, v, p);
        if (inst.T.is_zero() || inst.vstar_zero) continue;
        ExtScalar window = (inst.S < inst.T) ? ExtScalar::infinity() : sp.total();
        Rat mass = window.is_finite()
                       ? window.finite() * Rat(1 + static_cast<long>(draw(rng, 9)), 10)
                       : random_rat(rng, 200, 20);
        StepFunction g = random_profile(rng, mass);
        WitnessReport rep = hull_witness(g, inst, Rat(1, 10));
        ++r.cases;
        if (!rep.equimeasurable_with_g) fail(r, "witness not equimeasurable (general branch)");
        if (!rep.sandwich_holds) fail(r, "two-sided sandwich broken (general branch)");
        ++produced;
        ++general;
      } else if (shape == 2) {  // infinite zero set
        Interval domain = random_domain(
            rng, draw(rng, 2) == 0 ? DomainKind::HalfLine : DomainKind::WholeLine);
        StepOptions dopt;
        dopt.ensure_positive = true;
        WeightedSpace sp(force_positive_tails(rng, random_step(rng, domain, dopt)));
        StepOptions vo;
        vo.zero_tails = true;
        vo.ensure_positive = true;
        StepFunction v = random_step(rng, domain, vo);
        HullInstance inst(sp, v, p);
        if (!inst.vstar_zero) {
          ++r.cases;
          fail(r, "zero set of the constructed weight should have infinite mass");
          continue;
        }
        StepFunction g = random_profile(rng, random_rat(rng, 200, 20));
        WitnessReport rep = hull_witness_degenerate(g, inst, Rat(1, 10));
        ++r.cases;
        if (!rep.equimeasurable_with_g) fail(r, "witness not equimeasurable (zero route)");
        if (Value::compare(rep.lp_pow_p, Value(Rat(0))) != Value::Cmp::Equal)
          fail(r, "zero-route witness must have weighted norm exactly 0");
        if (!rep.sandwich_holds) fail(r, "zero-route norm bound broken");
        ++produced;
        ++zero_route;
      } else {  // strictly positive decaying tail
        const std::vector<Rat> heads = {Rat(0), Rat(1, 2), Rat(1)};
        const std::vector<Rat> tails = {Rat(-1, 2), Rat(-1), Rat(-2), Rat(-3)};
        PowerTail v({Monomial{Interval(Rat(0), Rat(1)), random_rat(rng, 20, 5), Rat(1),
                              heads[draw(rng, heads.size())]},
                     Monomial{Interval(Rat(1), std::nullopt), random_rat(rng, 20, 5), Rat(1),
                              tails[draw(rng, tails.size())]}});
        StepFunction g = random_profile(rng, random_rat(rng, 50, 10));
        WitnessReport rep = hull_witness_powertail(g, v, p, Rat(1, 10));
        ++r.cases;
        if (!rep.equimeasurable_with_g) fail(r, "witness not equimeasurable (tail route)");
        if (!rep.sandwich_holds) fail(r, "tail-route certified norm bound broken");
        ++produced;
        ++tail_route;
      }
    } catch (const std::exception& e) {
      ++r.cases;
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }
  if (produced < witness_target) {
    fail(r, "witness production fell short: " + std::to_string(produced) + " of " +
                std::to_string(witness_target));
  }
  note(r, "witnesses: exact " + std::to_string(eps_zero) + ", general " + std::to_string(general) +
              ", zero-set " + std::to_string(zero_route) + ", power-tail " +
              std::to_string(tail_route));
  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_weight_class_grid(std::uint64_t seed) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "weight-class-grid";
  Rng rng(seed);
  const std::vector<Rat> alphas = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
  const std::vector<Rat> ps = {Rat(3, 2), Rat(2), Rat(3)};

  for (const Rat& alpha : alphas) {
    for (const Rat& p : ps) {
      ++r.cases;
      try {
        PowerTail w = PowerTail::monomial(Rat(1), alpha);
        BpReport rep = bp_check(w, p);
        bool expect = alpha < p - Rat(1);
        if (rep.in_class != expect) {
          fail(r, "class verdict wrong at alpha=" + alpha.str() + " p=" + p.str());
          continue;
        }
        if (rep.in_class) {
          Rat closed = (alpha + Rat(1)) / (p - Rat(1) - alpha);
          if (!rep.exact_constant || !rep.constant.is_exact() ||
              !(rep.constant.exact() == ExtScalar(closed)))
            fail(r, "single-monomial constant must be the closed form");
          if (alpha == Rat(0) && p == Rat(2) && !(closed == Rat(1)))
            fail(r, "the flat weight at p=2 must give constant 1");
          for (int k = 0; k < 100; ++k) {
            Rat rr = random_rat(rng, 1000, 100);
            if (!Value::le_within_error(bp_ratio_at(w, p, rr), rep.constant)) {
              fail(r, "defining inequality violated at r=" + rr.str());
              break;
            }
          }
        }
      } catch (const std::exception& e) {
        fail(r, std::string("unexpected error: ") + e.what());
      }
    }
  }

  // indicator of (0,1) at p = 2: in class, constant 1
  ++r.cases;
  try {
    PowerTail box({Monomial{Interval(Rat(0), Rat(1)), Rat(1), Rat(1), Rat(0)},
                   Monomial{Interval(Rat(1), std::nullopt), Rat(0), Rat(1), Rat(0)}});
    BpReport rep = bp_check(box, Rat(2));
    if (!rep.in_class || !Value::eq_within_error(rep.constant, Value(Rat(1))))
      fail(r, "indicator weight must be in class with constant 1");
  } catch (const std::exception& e) {
    fail(r, std::string("unexpected error: ") + e.what());
  }

  // power weight rearrangement: staircase approximations converge from below
  for (long alpha : {1L, 2L}) {
    ++r.cases;
    try {
      WeightedSpace leb = WeightedSpace::lebesgue(Interval::whole());
      std::vector<StepFunction> flows;
      for (long k = 1; k <= 3; ++k) {
        long steps = 1L << k;
        Rat delta(4, steps);
        std::vector<Rat> breaks;
        std::vector<ExtScalar> values;
        for (long j = steps; j >= 1; --j) breaks.push_back(Rat(0) - delta * Rat(j));
        for (long j = 1; j <= steps; ++j) breaks.push_back(delta * Rat(j));
        values.push_back((delta * Rat(steps)).pow_int(alpha));
        for (long j = steps - 1; j >= 1; --j) values.push_back((delta * Rat(j)).pow_int(alpha));
        values.push_back(Rat(0));
        for (long j = 1; j <= steps - 1; ++j) values.push_back((delta * Rat(j)).pow_int(alpha));
        values.push_back((delta * Rat(steps)).pow_int(alpha));
        StepFunction stair(Interval::whole(), breaks, values);
        StepFunction flow = increasing_rearrangement(stair, leb);
        for (const Rat& t : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3)}) {
          Rat limit = (t / Rat(2)).pow_int(alpha);
          if (!(flow.value_at(t) <= ExtScalar(limit)))
            fail(r, "staircase rearrangement must stay below the closed form");
          if (!(ExtScalar(limit) <= flow.value_at(t + delta * Rat(2))))
            fail(r, "shifted staircase rearrangement must dominate the closed form");
        }
        if (!flows.empty() && !StepFunction::le_ae(flows.back(), flow))
          fail(r, "staircase rearrangements must refine monotonically");
        flows.push_back(std::move(flow));
      }
      PowerTail closed = power_weight_rearrangement(Rat(alpha));
      if (closed.pieces().size() != 1 || !(closed.pieces()[0].scale == Rat(2)) ||
          !(closed.pieces()[0].exponent == Rat(alpha)))
        fail(r, "closed-form rearrangement has the wrong shape");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  // change-of-measure identity and the two-inclusion chain
  for (int j = 0; j < 6; ++j) {
    try {
      Interval domain = random_domain(
          rng, draw(rng, 2) == 0 ? DomainKind::HalfLine : DomainKind::WholeLine);
      StepOptions dopt;
      dopt.ensure_positive = true;
      WeightedSpace sp(force_positive_tails(rng, random_step(rng, domain, dopt)));
      StepOptions vo;
      vo.allow_zero = false;
      StepFunction v = random_step(rng, domain, vo);
      std::vector<StepFunction> samples;
      for (int k = 0; k < 3; ++k) {
        StepOptions so;
        so.zero_tails = true;
        samples.push_back(random_step(rng, domain, so));
      }
      for (const Rat& p : {Rat(2), Rat(3)}) {
        ++r.cases;
        CorollaryReport co = corollary_check(sp, v, p);
        if (!co.identity_holds) fail(r, "change-of-measure identity broken");
        StepFunction w_low = increasing_rearrangement(v, sp);
        BpReport bp = bp_check(PowerTail::from_step(w_low), p);
        if (!bp.in_class) fail(r, "rearranged positive step weight must be in class");
        BanachChainReport chain = bp_implies_banach_chain_check(sp, v, p, samples);
        if (!chain.bp_ok || !chain.first_inclusion_ok || !chain.second_inclusion_ok)
          fail(r, "two-inclusion chain broken");
      }
    } catch (const std::exception& e) {
      ++r.cases;
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  // classical Lorentz identification
  const std::vector<std::pair<Rat, Rat>> lorentz_pairs = {
      {Rat(0), Rat(3, 2)}, {Rat(1, 2), Rat(2)}, {Rat(1), Rat(3)}, {Rat(3, 2), Rat(3)}};
  for (const auto& [alpha, p] : lorentz_pairs) {
    for (int k = 0; k < 3; ++k) {
      ++r.cases;
      try {
        StepFunction g = random_profile(rng, random_rat(rng, 50, 10));
        LorentzIdentityReport rep = classical_lorentz_identity_check(g, alpha, p);
        if (!rep.exponent_identity || !rep.integrand_match || !rep.scaling_match)
          fail(r, "classical Lorentz identification broken at alpha=" + alpha.str() +
                      " p=" + p.str());
      } catch (const std::exception& e) {
        fail(r, std::string("unexpected error: ") + e.what());
      }
    }
  }

  r.seconds = watch.elapsed();
  return r;
}

CriterionResult verify_oracle_differential(std::uint64_t seed, std::size_t per_family,
                                           std::size_t grid_n) {
  Stopwatch watch;
  CriterionResult r;
  r.name = "oracle-differential";
  Rng rng(seed);
  const double tol = 1e-3;

  for (std::size_t i = 0; i < per_family; ++i) {  // rearrangements
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng);
      StepOptions fo;
      fo.zero_tails = !sp.domain().is_bounded();
      fo.ensure_positive = true;
      StepFunction f = random_step(rng, sp.domain(), fo);
      StepFunction fstar = decreasing_rearrangement(f, sp);
      GridRearrangement got = grid_rearrange(f, sp, grid_n);
      for (const Rat& t : interior_samples(fstar)) {
        double exact = fstar.value_at(t).to_double();
        if (!rel_close(exact, got.value_at(t.to_double()), tol)) {
          fail(r, "grid rearrangement off at t=" + t.str());
          break;
        }
      }
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  const std::vector<Rat> norm_ps = {Rat(1), Rat(2), Rat(3), Rat(3, 2)};
  for (std::size_t i = 0; i < per_family; ++i) {  // norms and pairings
    ++r.cases;
    try {
      WeightedSpace sp = random_space(rng, static_cast<DomainKind>(draw(rng, 3)), true);
      StepFunction f = random_step(rng, sp.domain(), StepOptions{});
      StepFunction g = random_step(rng, sp.domain(), StepOptions{});
      StepFunction v = random_step(rng, sp.domain(), StepOptions{});
      const Rat& p = norm_ps[i % norm_ps.size()];

      GridModel model(sp, {&f, &g, &v}, grid_n);
      auto fv = model.sample(f);
      auto gv = model.sample(g);
      auto vv = model.sample(v);

      Value lp = weighted_lp_pow_p(f, sp, v, p);
      if (!rel_close(lp.to_double(), grid_power_norm(model, fv, vv, p.to_double()), tol))
        fail(r, "weighted p-power norm off");

      GridRearrangement rf = grid_rearrange_cells(model, fv);
      GridRearrangement rg = grid_rearrange_cells(model, gv);
      double budget = std::min(sp.total().to_double(), 1.0);
      ExtScalar k_exact = l1_plus_linf_norm(f, sp);
      if (!rel_close(k_exact.to_double(), grid_k_functional(rf, budget), tol))
        fail(r, "K-functional off");

      ExtScalar pairing = integrate(StepFunction::multiply(f, g), sp);
      if (!rel_close(pairing.to_double(), grid_pairing(model, fv, gv), tol))
        fail(r, "pairing off");
      InequalityReport hl = hardy_littlewood(f, g, sp);
      if (!rel_close(hl.rhs.to_double(), star_pairing(rf, rg), tol))
        fail(r, "rearranged pairing off");

      StepFunction fstar = decreasing_rearrangement(f, sp);
      StepFunction v_low = increasing_rearrangement(v, sp);
      Value lambda = halfline_lambda_pow_p(fstar, v_low, p);
      GridRearrangement rfp = rf;
      for (auto& x : rfp.value) x = std::pow(x, p.to_double());
      GridRearrangement rv = grid_increasing_cells(model, vv);
      if (!rel_close(lambda.to_double(), star_pairing(rfp, rv), tol))
        fail(r, "rearranged weighted functional off");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  const std::vector<Rat> embed_ps = {Rat(3, 2), Rat(2), Rat(3)};
  for (std::size_t i = 0; i < per_family; ++i) {  // embedding constants
    ++r.cases;
    try {
      TwoMeasures m = random_abs_continuous_pair(rng, draw(rng, 2) == 0);
      const Rat& p = embed_ps[i % embed_ps.size()];
      EmbeddingResult res = embedding_constant(m, p);
      if (!rel_close(res.A.to_double(), bathtub_search(m, p, grid_n), tol))
        fail(r, "embedding constant off");
    } catch (const std::exception& e) {
      fail(r, std::string("unexpected error: ") + e.what());
    }
  }

  r.seconds = watch.elapsed();
  return r;
}

std::vector<CriterionResult> verify_everything(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(verify_rearrangement_axioms(seed, 10000));
  out.push_back(verify_monotone_chains(seed + 1, 1000));
  out.push_back(verify_transform_construction(seed + 2, 1000));
  out.push_back(verify_reverse_inequality(seed + 3, 10000));
  out.push_back(verify_embedding_campaign(seed + 4, 200));
  out.push_back(verify_hull_campaign(seed + 5, 10000, 500));
  out.push_back(verify_weight_class_grid(seed + 6));
  out.push_back(verify_oracle_differential(seed + 7, 50, 100000));
  return out;
}

}  // namespace rihull
