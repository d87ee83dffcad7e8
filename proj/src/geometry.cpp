#include "hecke/geometry.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hecke {

namespace {

// Precomputed finite root system data for one datum.
struct Geo {
  const RootDatum& d;
  IntMat amat;  // amat[i][t] = alpha_i(b_t)
  std::vector<WeylElt> W;
  std::vector<RealRoot> pos;

  explicit Geo(const RootDatum& dd) : d(dd) {
    if (!d.finite_type()) throw NotFiniteType("geometry needs a finite Weyl group");
    int n = d.rank(), k = d.y_rank();
    amat.assign(n, IntVec(k, 0));
    for (int t = 0; t < k; ++t) {
      Coweight e(k, 0);
      e[t] = 1;
      for (int i = 0; i < n; ++i) amat[i][t] = d.alpha(i, e);
    }
    W = enumerate_all(d);
    pos = d.positive_roots_finite();
  }

  Rat simple_val(int i, const RatVec& p) const {
    Rat s = 0;
    for (std::size_t t = 0; t < p.size(); ++t)
      if (amat[i][t] != 0) s += Rat(static_cast<long>(amat[i][t])) * p[t];
    return s;
  }
  Rat val(const IntVec& root, const RatVec& p) const {
    Rat s = 0;
    for (int i = 0; i < d.rank(); ++i)
      if (root[i] != 0) s += Rat(static_cast<long>(root[i])) * simple_val(i, p);
    return s;
  }
  Int val(const IntVec& root, const Coweight& y) const { return d.pair(root, y); }

  // chamber u with gamma = u alpha_i satisfying `ok` for every i
  template <class F>
  WeylElt find_chamber(F&& ok) const {
    for (const auto& u : W) {
      bool good = true;
      for (int i = 0; i < d.rank() && good; ++i) {
        IntVec e(d.rank(), 0);
        e[i] = 1;
        good = ok(u.apply_root(e));
      }
      if (good) return u;
    }
    throw Error("Internal", "no chamber found");
  }

  WeylElt neg_toward_origin(const RatVec& z) const {
    return find_chamber([&](const IntVec& g) {
      Rat v = val(g, z);
      return v > 0 || (v == 0 && is_negative_root(g));
    });
  }

  WeylElt chamber(const Coweight& xi) const {
    return find_chamber([&](const IntVec& r) { return val(r, xi) > 0; });
  }

  // chambers u with u^{-1} xi in the closed fundamental chamber
  std::vector<WeylElt> closure_chambers(const Coweight& xi) const {
    std::vector<WeylElt> r;
    for (const auto& u : W) {
      bool good = true;
      for (int i = 0; i < d.rank() && good; ++i) {
        IntVec e(d.rank(), 0);
        e[i] = 1;
        good = val(u.apply_root(e), xi) >= 0;
      }
      if (good) r.push_back(u);
    }
    return r;
  }

  // closure chamber of xi nearest to `from`
  WeylElt nearest_closure_chamber(const Coweight& xi, const WeylElt& from) const {
    auto cs = closure_chambers(xi);
    WeylElt inv = from.inverse();
    WeylElt best = cs.front();
    int bl = (inv * best).length();
    for (const auto& u : cs) {
      int l = (inv * u).length();
      if (l < bl || (l == bl && u < best)) best = u, bl = l;
    }
    return best;
  }
};

bool is_simple(const IntVec& b, int& idx) {
  int nz = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) {
      if (b[i] != 1) return false;
      idx = static_cast<int>(i);
      ++nz;
    }
  return nz == 1;
}

IntVec neg(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

RatVec add_scaled(const RatVec& p, const Rat& s, const Coweight& xi) {
  RatVec r = p;
  for (std::size_t t = 0; t < r.size(); ++t) r[t] += s * Rat(static_cast<long>(xi[t]));
  return r;
}

// smallest s > 0 with some root integral at p + s xi, or nullopt
std::optional<Rat> next_event(const Geo& g, const RatVec& p, const Coweight& xi) {
  std::optional<Rat> best;
  for (const auto& r : g.pos) {
    Int b = g.val(r.root, xi);
    if (b == 0) continue;
    Rat a = g.val(r.root, p);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    Rat n;
    if (b > 0) {
      n = Rat(fl + 1);
    } else {
      mpz_class ce;
      mpz_cdiv_q(ce.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      n = Rat(ce - 1);
    }
    Rat s = (n - a) / Rat(static_cast<long>(b));
    if (!best || s < *best) best = s;
  }
  return best;
}

bool chain_root_ok(const Geo& g, const IntVec& beta, const RatVec& z, const Coweight& xi) {
  if (g.val(beta, xi) >= 0) return false;
  Rat bz = g.val(beta, z);
  if (!is_integral(bz)) return false;
  return bz > 0 || (bz == 0 && is_negative_root(beta));
}

Coweight reflect_root(const Geo& g, const RealRoot& r, const Coweight& xi) {
  Int b = g.val(r.root, xi);
  Coweight out = xi;
  for (std::size_t t = 0; t < out.size(); ++t) out[t] -= b * r.coroot_y[t];
  return out;
}

// directions reachable from xi by a chain at z, with one certificate each
std::map<Coweight, std::pair<std::vector<IntVec>, std::vector<Coweight>>> reachable(const Geo& g, const RatVec& z,
                                                                                   const Coweight& xi) {
  std::map<Coweight, std::pair<std::vector<IntVec>, std::vector<Coweight>>> seen;
  seen[xi] = {{}, {xi}};
  std::vector<Coweight> queue{xi};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Coweight cur = queue[h];
    for (const auto& r : g.pos)
      for (int s : {1, -1}) {
        IntVec beta = s > 0 ? r.root : neg(r.root);
        if (!chain_root_ok(g, beta, z, cur)) continue;
        Coweight nxt = reflect_root(g, r, cur);
        if (seen.count(nxt)) continue;
        auto cert = seen[cur];
        cert.first.push_back(beta);
        cert.second.push_back(nxt);
        seen[nxt] = cert;
        queue.push_back(nxt);
      }
  }
  return seen;
}

Gallery build_gallery(const Geo& g, const RatVec& z, const std::vector<int>& type, const LocalChamber& start,
                      const LocalChamber& ref, const std::vector<bool>& moves) {
  Gallery gal{z, type, start, ref, moves, {start}, {}};
  WeylElt u = start.u;
  int n = g.d.rank();
  for (std::size_t j = 0; j < type.size(); ++j) {
    if (moves[j]) u = u.rmul(type[j]);
    gal.chambers.push_back({u, start.sign});
    IntVec e(n, 0);
    e[type[j]] = 1;
    IntVec b = u.apply_root(e);
    gal.beta.push_back(start.sign > 0 ? b : neg(b));
  }
  return gal;
}

bool is_wall(const Geo& g, const IntVec& beta, const RatVec& z) { return is_integral(g.val(beta, z)); }

bool separates(const LocalChamber& ref, const IntVec& beta) {
  IntVec b = ref.u.apply_inverse_root(beta);
  int s = is_negative_root(b) ? -1 : 1;
  return ref.sign * s < 0;
}

bool folded_ok(const Geo& g, const Gallery& gal) {
  for (std::size_t j = 0; j < gal.type.size(); ++j)
    if (!gal.moves[j] && !(is_wall(g, gal.beta[j], gal.z) && separates(gal.ref, gal.beta[j]))) return false;
  return true;
}

LaurentPoly wall_param(const Geo& g, const IntVec& beta, const RatVec& z) {
  Rat k = -g.val(beta, z);
  if (!is_integral(k)) throw Error("Internal", "not a wall");
  IntVec b = is_negative_root(beta) ? neg(beta) : beta;
  int n = g.d.rank(), idx = -1;
  while (!is_simple(b, idx)) {
    bool moved = false;
    for (int j = 0; j < n && !moved; ++j) {
      Int c = 0;
      for (int l = 0; l < n; ++l) c += b[l] * g.d.cartan(j, l);
      if (c > 0) {
        b[j] -= c;
        moved = true;
      }
    }
    if (!moved) throw Error("Internal", "root reduction stalled");
  }
  bool odd = mpz_odd_p(k.get_num_mpz_t()) != 0;
  return LaurentPoly::q(g.d.ring(), g.d.symbol(idx, odd));
}

LaurentPoly liftings(const Geo& g, const Gallery& gal) {
  if (!folded_ok(g, gal)) throw NotCentrifugallyFolded("fold at a non-separating position");
  LaurentPoly r(g.d.ring(), 1);
  for (std::size_t j = 0; j < gal.type.size(); ++j) {
    if (!is_wall(g, gal.beta[j], gal.z)) continue;
    if (!gal.moves[j])
      r = r * (wall_param(g, gal.beta[j], gal.z) - LaurentPoly(g.d.ring(), 1));
    else if (separates(gal.ref, gal.beta[j]))
      r = r * wall_param(g, gal.beta[j], gal.z);
  }
  return r;
}

std::vector<Gallery> galleries(const Geo& g, const RatVec& z, const std::vector<int>& type, const LocalChamber& start,
                               const LocalChamber& ref, const std::function<bool(const LocalChamber&)>& end) {
  std::vector<Gallery> out;
  std::size_t r = type.size();
  std::vector<bool> moves(r, true);
  // folds only where the wall test can pass, so prune by prefix
  std::function<void(std::size_t, WeylElt)> rec = [&](std::size_t j, WeylElt u) {
    if (j == r) {
      LocalChamber last{u, start.sign};
      if (!end || end(last)) out.push_back(build_gallery(g, z, type, start, ref, moves));
      return;
    }
    IntVec e(g.d.rank(), 0);
    e[type[j]] = 1;
    moves[j] = true;
    rec(j + 1, u.rmul(type[j]));
    IntVec b = u.apply_root(e);
    if (start.sign < 0) b = neg(b);
    if (is_wall(g, b, z) && separates(ref, b)) {
      moves[j] = false;
      rec(j + 1, u);
      moves[j] = true;
    }
  };
  rec(0, start.u);
  return out;
}

LaurentPoly gallery_sum(const Geo& g, const RatVec& z, const std::vector<int>& type, const LocalChamber& start,
                        const LocalChamber& ref, const std::function<bool(const LocalChamber&)>& end) {
  LaurentPoly s(g.d.ring(), 0);
  for (const auto& gal : galleries(g, z, type, start, ref, end)) s += liftings(g, gal);
  return s;
}

// lifting factor at an interior wall point
LaurentPoly interior_factor(const Geo& g, const RatVec& z, const Coweight& in, const Coweight& out) {
  WeylElt um = g.neg_toward_origin(z);
  WeylElt cxi = g.nearest_closure_chamber(in, um);
  std::vector<int> type = (um.inverse() * cxi).word();
  LocalChamber q{g.closure_chambers(out).front(), 1};
  auto ends = g.closure_chambers(out);
  return gallery_sum(g, z, type, {um, -1}, q, [&](const LocalChamber& c) {
    return std::find(ends.begin(), ends.end(), c.u) != ends.end();
  });
}

std::vector<WallPoint> wall_points_impl(const Geo& g, const HeckePath& p) {
  std::vector<WallPoint> out;
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    const Coweight& xi = p.directions[k];
    Rat t = p.times[k];
    RatVec z = p.vertices[k];
    while (true) {
      auto s = next_event(g, z, xi);
      if (!s || t + *s >= p.times[k + 1]) break;
      t += *s;
      z = add_scaled(z, *s, xi);
      out.push_back({t, z, xi, xi});
    }
    if (k + 2 < p.vertices.size()) out.push_back({p.times[k + 1], p.vertices[k + 1], xi, p.directions[k + 1]});
  }
  return out;
}

bool rat_vec_eq(const RatVec& a, const RatVec& b) { return a == b; }

std::vector<HeckePath> enumerate_impl(const Geo& g, const Coweight& shape, const RatVec& y0, const RatVec& y1,
                                      int depth_cap) {
  const RootDatum& d = g.d;
  if (!d.is_dominant(shape)) throw NotDominant("path shape must be dominant");
  if (depth_cap < 0) depth_cap = static_cast<int>(std::max<Int>(1, 8 * d.height(shape)));
  std::set<Coweight> orbit;
  for (const auto& w : g.W) orbit.insert(w.apply(shape));
  std::vector<HeckePath> out;
  bool zero = std::all_of(shape.begin(), shape.end(), [](Int x) { return x == 0; });
  if (zero) {
    if (y0 == y1) {
      HeckePath p;
      p.shape = shape;
      p.vertices = {y0, y1};
      p.times = {Rat(0), Rat(1)};
      p.directions = {shape};
      out.push_back(p);
    }
    return out;
  }
  HeckePath cur;
  cur.shape = shape;
  std::function<void(const Rat&, const RatVec&, const Coweight&)> rec = [&](const Rat& t, const RatVec& p,
                                                                             const Coweight& xi) {
    auto s = next_event(g, p, xi);
    if (!s || t + *s >= Rat(1)) {
      RatVec end = add_scaled(p, Rat(1) - t, xi);
      if (rat_vec_eq(end, y1)) {
        HeckePath done = cur;
        done.directions.push_back(xi);
        done.vertices.push_back(end);
        done.times.push_back(Rat(1));
        for (std::size_t k = 0; k + 1 < done.directions.size(); ++k)
          if (!d.qvee_leq(done.directions[k], done.directions[k + 1])) done.monotone = false;
        out.push_back(std::move(done));
      }
      return;
    }
    Rat tn = t + *s;
    RatVec z = add_scaled(p, *s, xi);
    for (const auto& [nxt, cert] : reachable(g, z, xi)) {
      if (nxt == xi) {
        rec(tn, z, xi);
        continue;
      }
      if (static_cast<int>(cur.folds.size()) >= depth_cap)
        throw DepthExceeded("more than " + std::to_string(depth_cap) + " fold events");
      cur.directions.push_back(xi);
      cur.vertices.push_back(z);
      cur.times.push_back(tn);
      cur.folds.push_back({tn, z, cert.first, cert.second});
      rec(tn, z, nxt);
      cur.directions.pop_back();
      cur.vertices.pop_back();
      cur.times.pop_back();
      cur.folds.pop_back();
    }
  };
  for (const auto& xi : orbit) {
    cur.vertices = {y0};
    cur.times = {Rat(0)};
    cur.directions.clear();
    cur.folds.clear();
    rec(Rat(0), y0, xi);
  }
  return out;
}

LaurentPoly path_interior(const Geo& g, const HeckePath& p) {
  LaurentPoly r(g.d.ring(), 1);
  for (const auto& wp : wall_points_impl(g, p)) {
    r = r * interior_factor(g, wp.z, wp.in, wp.out);
    if (r.is_zero()) break;
  }
  return r;
}

}  // namespace

RatVec to_rat_vec(const Coweight& y) {
  RatVec r;
  for (Int x : y) r.push_back(Rat(static_cast<long>(x)));
  return r;
}

Gallery make_gallery(const RootDatum& d, const RatVec& z, const std::vector<int>& type, const LocalChamber& start,
                     const LocalChamber& ref, const std::vector<bool>& moves) {
  Geo g(d);
  return build_gallery(g, z, type, start, ref, moves);
}

bool is_centrifugally_folded(const RootDatum& d, const Gallery& g) { return folded_ok(Geo(d), g); }

std::vector<Gallery> folded_galleries(const RootDatum& d, const RatVec& z, const std::vector<int>& type,
                                      const LocalChamber& start, const LocalChamber& ref,
                                      const std::optional<LocalChamber>& end) {
  Geo g(d);
  std::function<bool(const LocalChamber&)> f;
  if (end) f = [&](const LocalChamber& c) { return c == *end; };
  return galleries(g, z, type, start, ref, f);
}

LaurentPoly count_liftings(const RootDatum& d, const Gallery& g) { return liftings(Geo(d), g); }

LaurentPoly wall_parameter(const RootDatum& d, const IntVec& beta, const RatVec& z) {
  return wall_param(Geo(d), beta, z);
}

WeylElt negative_toward_origin(const RootDatum& d, const RatVec& z) { return Geo(d).neg_toward_origin(z); }

WeylElt chamber_of(const RootDatum& d, const Coweight& xi) {
  return Geo(d).chamber(xi);
}

std::vector<WallPoint> wall_points(const RootDatum& d, const HeckePath& p) { return wall_points_impl(Geo(d), p); }

std::vector<HeckePath> enumerate_hecke_paths(const DatumPtr& d, const Coweight& shape, const RatVec& y0,
                                             const RatVec& y1, int depth_cap) {
  Geo g(*d);
  return enumerate_impl(g, shape, y0, y1, depth_cap);
}

bool validate_path(const RootDatum& d, const HeckePath& p) {
  Geo g(d);
  std::set<Coweight> orbit;
  for (const auto& w : g.W) orbit.insert(w.apply(p.shape));
  std::size_t m = p.directions.size();
  if (m == 0 || p.vertices.size() != m + 1 || p.times.size() != m + 1 || p.folds.size() + 1 != m) return false;
  if (p.times.front() != 0 || p.times.back() != 1) return false;
  for (std::size_t k = 0; k < m; ++k) {
    if (!orbit.count(p.directions[k])) return false;
    if (!(p.times[k] < p.times[k + 1])) return false;
    if (p.vertices[k + 1] != add_scaled(p.vertices[k], p.times[k + 1] - p.times[k], p.directions[k])) return false;
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const PathFold& f = p.folds[k];
    if (f.z != p.vertices[k + 1] || f.t != p.times[k + 1]) return false;
    if (f.xis.size() != f.roots.size() + 1 || f.roots.empty()) return false;
    if (f.xis.front() != p.directions[k] || f.xis.back() != p.directions[k + 1]) return false;
    for (std::size_t j = 0; j < f.roots.size(); ++j) {
      const IntVec& b = f.roots[j];
      if (!chain_root_ok(g, b, f.z, f.xis[j])) return false;
      IntVec pb = is_negative_root(b) ? neg(b) : b;
      auto it = std::find_if(g.pos.begin(), g.pos.end(), [&](const RealRoot& r) { return r.root == pb; });
      if (it == g.pos.end()) return false;
      if (reflect_root(g, *it, f.xis[j]) != f.xis[j + 1]) return false;
    }
  }
  return true;
}

LaurentPoly m_lambda_mu(const DatumPtr& dp, const Coweight& lambda, const Coweight& mu, const Coweight& nu) {
  Geo g(*dp);
  const RootDatum& d = *dp;
  if (!d.is_dominant(lambda) || !d.is_dominant(mu)) throw NotDominant("lambda and mu must be dominant");
  std::set<Coweight> starts;
  for (const auto& w : g.W) starts.insert(w.apply(lambda));
  RatVec y = to_rat_vec(nu);
  WeylElt uy = g.neg_toward_origin(y);
  LaurentPoly total(d.ring(), 0);
  for (const auto& s : starts)
    for (const auto& p : enumerate_impl(g, mu, to_rat_vec(s), y, -1)) {
      LaurentPoly f = path_interior(g, p);
      if (f.is_zero()) continue;
      const Coweight& last = p.directions.back();
      auto cs = g.closure_chambers(last);
      if (std::find(cs.begin(), cs.end(), uy) == cs.end()) {
        // every minimal gallery from C_y^- to the chamber of pi_-(y)
        WeylElt cstar = g.nearest_closure_chamber(last, uy);
        std::vector<int> type = (uy.inverse() * cstar).word();
        Gallery gal = build_gallery(g, y, type, {uy, -1}, {uy, 1}, std::vector<bool>(type.size(), true));
        for (const auto& b : gal.beta) f = f * wall_param(g, b, y);
      }
      total += f;
    }
  return total;
}

LaurentPoly geometric_structure_constant(const DatumPtr& dp, const WPlusIndex& w, const WPlusIndex& v,
                                         const WPlusIndex& u, int depth_cap) {
  Geo g(*dp);
  const RootDatum& d = *dp;
  auto [mupp, wmu_inv] = d.dominant_rep(v.lambda);
  for (int i = 0; i < d.rank(); ++i)
    if (d.alpha(i, mupp) <= 0) throw MuNotRegular("mu must be regular");
  WeylElt wmu = wmu_inv.inverse();  // wmu(mu) = mu++
  RatVec z0 = to_rat_vec(w.lambda), y = to_rat_vec(u.lambda);
  WeylElt wlp = w_lambda_plus(d, w.lambda).inverse();  // wlp(lambda) dominant
  WeylElt um0 = g.neg_toward_origin(z0), umy = g.neg_toward_origin(y);
  LocalChamber cprime{um0 * wlp * w.w, 1};
  const WeylElt& uy = u.w;  // C_y = germ_y(y + u C_f)
  WeylElt target = wmu * v.w;
  LocalChamber ctilde{uy * target.inverse(), -1};
  std::vector<int> itype = wmu.word();

  LaurentPoly total(d.ring(), 0);
  for (const auto& p : enumerate_impl(g, mupp, z0, y, depth_cap)) {
    LaurentPoly start = gallery_sum(g, z0, itype, {g.chamber(p.directions.front()), 1}, {um0, -1},
                                    [&](const LocalChamber& c) { return c == cprime; });
    if (start.is_zero()) continue;
    LaurentPoly f = path_interior(g, p);
    if (f.is_zero()) continue;
    WeylElt clast = g.chamber(p.directions.back());
    if (clast == umy) {
      if (umy.inverse() * uy != target) continue;
    } else {
      std::vector<int> type = (umy.inverse() * clast).word();
      f = f * gallery_sum(g, y, type, {umy, -1}, {uy, 1}, [&](const LocalChamber& c) { return c == ctilde; });
    }
    total += f * start;
  }
  return total;
}

}  // namespace hecke
