#include "shadowcover/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "shadowcover/body_io.hpp"

namespace shadowcover {

namespace {

constexpr const char* kCertificateNote =
    "sampled sweep: a certificate at the stated direction resolution, not a proof";

Vec canonical_sign(Vec u) {
  for (double x : u) {
    if (x > 1e-12) return u;
    if (x < -1e-12) return scaled(u, -1.0);
  }
  return u;
}

void push_unique(std::vector<Vec>& dirs, const Vec& u, std::size_t cap) {
  if (dirs.size() >= cap) return;
  for (const Vec& v : dirs)
    if (dist(v, u) < 1e-9) return;
  dirs.push_back(u);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9E3779B97F4A7C15ull + 0x1234ull);
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDull;
  x ^= x >> 33;
  return x;
}

}  // namespace

DirectionSample sample_directions(int n, int count, DirectionStrategy strategy,
                                  std::uint64_t seed) {
  if (n < 2) throw BadParameter("sample_directions: need n >= 2");
  if (count < 1) throw BadParameter("sample_directions: need count >= 1");
  DirectionSample s;
  s.n = n;
  s.strategy = strategy;
  s.seed = seed;
  switch (strategy) {
    case DirectionStrategy::Fibonacci: {
      if (n == 2) {
        for (int k = 0; k < count; ++k) {
          const double th = 2.0 * M_PI * k / count;
          s.directions.push_back({std::cos(th), std::sin(th)});
        }
      } else if (n == 3) {
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int k = 0; k < count; ++k) {
          const double z = 1.0 - (2.0 * k + 1.0) / count;
          const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
          const double phi = 2.0 * M_PI * k / golden;
          s.directions.push_back({r * std::cos(phi), r * std::sin(phi), z});
        }
      } else {
        throw BadStrategy("fibonacci directions exist only for n = 2, 3");
      }
      break;
    }
    case DirectionStrategy::Gaussian: {
      GaussianSource src(seed);
      while (static_cast<int>(s.directions.size()) < count) {
        Vec g = gaussian_vec(src, n);
        if (norm(g) < 1e-8) continue;
        s.directions.push_back(normalized(g));
      }
      break;
    }
    case DirectionStrategy::Informed:
      throw BadStrategy("informed directions require bodies; use informed_directions");
  }
  return s;
}

std::vector<Vec> informed_directions(const Body& K, const Body& L, std::size_t cap) {
  std::vector<Vec> dirs;
  for (const Body* b : {&K, &L}) {
    if (!b->full_dimensional()) continue;
    for (const Facet& f : b->facets().facets)
      push_unique(dirs, canonical_sign(f.normal), cap);
  }
  for (const Body* b : {&K, &L}) {
    const auto& vx = b->vertices();
    for (size_t i = 0; i < vx.size() && dirs.size() < cap; ++i)
      for (size_t j = i + 1; j < vx.size() && dirs.size() < cap; ++j) {
        Vec d = sub(vx[i], vx[j]);
        if (norm(d) < 1e-12) continue;
        push_unique(dirs, canonical_sign(normalized(d)), cap);
      }
  }
  return dirs;
}

std::vector<Basis> sample_subspaces(int n, int d, int count, std::uint64_t seed) {
  if (d < 1 || d > n - 1) throw BadCodimension("sample_subspaces: need 1 <= d <= n-1");
  if (count < 1) throw BadParameter("sample_subspaces: need count >= 1");
  std::vector<Basis> frames;
  frames.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    AffineMap rot = random_rotation(n, mix(seed, static_cast<std::uint64_t>(i)));
    Basis b;
    b.ambient = n;
    for (int col = 0; col < n - d; ++col) {
      Vec v = zeros(n);
      for (int row = 0; row < n; ++row) v[static_cast<size_t>(row)] = rot.linear(row, col);
      b.vectors.push_back(std::move(v));
    }
    frames.push_back(std::move(b));
  }
  return frames;
}

DirectionVerdict covering_verdict(const Body& K, const Body& L, const Basis& subspace) {
  DirectionVerdict v;
  v.subspace = subspace;
  Body kp = project(K, subspace);
  Body lp_body = project(L, subspace);
  ContainmentWitness w = translate_into(kp, lp_body);
  v.covered = w.feasible;
  v.margin = w.margin;
  if (w.feasible)
    v.witness = w.translation;
  else
    v.violated_normal = w.violated_normal;
  return v;
}

DirectionVerdict covering_verdict_direction(const Body& K, const Body& L, const Vec& u) {
  Basis perp = complement_basis({normalized(u)}, static_cast<int>(u.size()));
  DirectionVerdict v = covering_verdict(K, L, perp);
  v.direction = normalized(u);
  return v;
}

namespace {

struct RefineEntry {
  Vec dir;
  Vec partner;
  int depth;
};

}  // namespace

CoveringReport covering_sweep(const Body& K, const Body& L, int d, int count,
                              std::uint64_t seed, bool refine) {
  const int n = K.dim();
  if (L.dim() != n) throw DimensionMismatch("covering_sweep: dimension mismatch");
  if (d < 1 || d > n - 1) throw BadCodimension("covering_sweep: need 1 <= d <= n-1");
  CoveringReport rep;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  rep.requested_count = count;
  rep.note = kCertificateNote;

  if (d == 1) {
    const DirectionStrategy strat =
        (n <= 3) ? DirectionStrategy::Fibonacci : DirectionStrategy::Gaussian;
    std::vector<Vec> dirs = sample_directions(n, count, strat, seed).directions;
    for (const Vec& u : informed_directions(K, L)) dirs.push_back(u);
    for (const Vec& u : dirs) rep.verdicts.push_back(covering_verdict_direction(K, L, u));

    if (refine) {
      const double low = 10.0 * tolerances().feasibility;
      std::deque<RefineEntry> queue;
      for (const DirectionVerdict& v : rep.verdicts) {
        if (std::abs(v.margin) >= low) continue;
        // nearest sampled neighbors seed the subdivision
        std::vector<std::pair<double, const Vec*>> near;
        for (const DirectionVerdict& w : rep.verdicts) {
          if (&w == &v) continue;
          near.emplace_back(dist(v.direction, w.direction), &w.direction);
        }
        std::sort(near.begin(), near.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const size_t take = std::min<size_t>(near.size(), 2 * static_cast<size_t>(n - 1));
        for (size_t i = 0; i < take; ++i)
          queue.push_back({v.direction, *near[i].second, 1});
      }
      while (!queue.empty()) {
        RefineEntry e = queue.front();
        queue.pop_front();
        Vec mid = add(e.dir, e.partner);
        if (norm(mid) < 1e-9) continue;
        mid = normalized(mid);
        DirectionVerdict v = covering_verdict_direction(K, L, mid);
        rep.verdicts.push_back(v);
        rep.refinement_depth = std::max(rep.refinement_depth, e.depth);
        if (e.depth < 6 && std::abs(v.margin) < low) {
          queue.push_back({mid, e.dir, e.depth + 1});
          queue.push_back({mid, e.partner, e.depth + 1});
        }
      }
    }
  } else {
    for (const Basis& frame : sample_subspaces(n, d, count, seed))
      rep.verdicts.push_back(covering_verdict(K, L, frame));
  }

  rep.all_covered = true;
  rep.worst_margin = 1e300;
  for (const DirectionVerdict& v : rep.verdicts) {
    rep.all_covered = rep.all_covered && v.covered;
    rep.worst_margin = std::min(rep.worst_margin, v.margin);
  }
  return rep;
}

TransportPair transport_verdict(const Body& K, const Body& L, const AffineMap& psi,
                                const Vec& u) {
  if (std::abs(psi.det()) <= 1e-12) throw SingularMap("transport_verdict: singular map");
  TransportPair tp;
  tp.original = covering_verdict_direction(K, L, u);
  const Vec tu = normalized(mat_vec(psi.linear, normalized(u)));
  tp.transported = covering_verdict_direction(affine_image(K, psi), affine_image(L, psi), tu);
  tp.agree = (tp.original.covered == tp.transported.covered);
  return tp;
}

DilateCertificate dilate_cover_certificate(const Body& K, const Body& L, int d,
                                           bool sweep_all_covered) {
  const int n = K.dim();
  if (d < 1 || d > n - 1) throw BadCodimension("dilate_cover_certificate: bad codimension");
  DilateCertificate cert;
  cert.factor = static_cast<double>(n) / (n - d);
  cert.sweep_recorded = sweep_all_covered;
  cert.witness = translate_into(K, dilate(L, cert.factor));
  if (sweep_all_covered && !cert.witness.feasible)
    throw SweepInconclusive(
        "dilate certificate infeasible although the sweep passed: either the "
        "sampling resolution was insufficient or a numerical issue occurred");
  return cert;
}

BoundReport bound_report(int n, int d) {
  if (n < 2) throw BadParameter("bound_report: need n >= 2");
  if (d < 1 || d > n - 1) throw BadCodimension("bound_report: need 1 <= d <= n-1");
  BoundReport r;
  r.n = n;
  r.d = d;
  r.dilate_bound = static_cast<double>(n) / (n - d);
  r.volume_bound = std::pow(r.dilate_bound, n);
  r.rs_bound = binomial(2 * n, n) / std::pow(2.0, n);
  r.ball_bound = 1.1696 * std::sqrt(static_cast<double>(n));
  r.asymptote = std::exp(static_cast<double>(d));
  r.universal = (d == 1) ? 2.942 : std::nan("");
  if (n == 2 && d == 1)
    r.note = "the planar constant is sharp at 3/2, below every bound in this row";
  return r;
}

// ---- serialization --------------------------------------------------------

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (double x : v) a.push_back(json_num(x));
  return a;
}

json verdict_to_json(const DirectionVerdict& v) {
  json j;
  if (!v.direction.empty()) j["direction"] = vec_to_json(v.direction);
  json frame = json::array();
  for (const Vec& b : v.subspace.vectors) frame.push_back(vec_to_json(b));
  j["frame"] = std::move(frame);
  j["covered"] = v.covered;
  j["margin"] = json_num(v.margin);
  if (v.covered)
    j["witness"] = vec_to_json(v.witness);
  else
    j["violated_normal"] = vec_to_json(v.violated_normal);
  return j;
}

}  // namespace

json to_json(const CoveringReport& r) {
  json j;
  j["schema"] = "shadowcover/1";
  j["n"] = r.n;
  j["d"] = r.d;
  j["seed"] = r.seed;
  j["direction_count"] = static_cast<int>(r.verdicts.size());
  j["requested_count"] = r.requested_count;
  j["all_covered"] = r.all_covered;
  j["worst_margin"] = json_num(r.worst_margin);
  j["refinement_depth"] = r.refinement_depth;
  j["note"] = r.note;
  json vs = json::array();
  for (const DirectionVerdict& v : r.verdicts) vs.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(vs);
  return j;
}

json to_json(const BoundReport& r) {
  json j;
  j["schema"] = "shadowcover/1";
  j["n"] = r.n;
  j["d"] = r.d;
  j["dilate_bound"] = json_num(r.dilate_bound);
  j["volume_bound"] = json_num(r.volume_bound);
  j["rs_bound"] = json_num(r.rs_bound);
  j["ball_bound"] = json_num(r.ball_bound);
  j["asymptote"] = json_num(r.asymptote);
  if (std::isnan(r.universal))
    j["universal"] = nullptr;
  else
    j["universal"] = json_num(r.universal);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_csv(const CoveringReport& r) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  const int width = r.n;
  for (int i = 0; i < width; ++i) out << "u" << i << ",";
  out << "covered,margin";
  const int wdim = r.n - r.d;
  for (int i = 0; i < wdim; ++i) out << ",w" << i;
  out << "\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
  };
  for (const DirectionVerdict& v : r.verdicts) {
    if (!v.direction.empty()) {
      for (double x : v.direction) out << num(x) << ",";
    } else {
      // frames have no single direction; emit the complement's first axis gap
      for (int i = 0; i < width; ++i) out << ",";
    }
    out << (v.covered ? 1 : 0) << "," << num(v.margin);
    for (int i = 0; i < wdim; ++i) {
      out << ",";
      if (v.covered && i < static_cast<int>(v.witness.size())) out << num(v.witness[static_cast<size_t>(i)]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace shadowcover
