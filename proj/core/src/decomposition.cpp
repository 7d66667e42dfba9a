#include "trider/decomposition.hpp"

#include <string>

namespace trider {

namespace {

Matrix block(const Matrix& m, std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(row0 + r, col0 + c);
  return out;
}

void set_block(Matrix& m, std::size_t row0, std::size_t col0, const Vector& column_part, std::size_t col) {
  for (std::size_t r = 0; r < column_part.size(); ++r) m(row0 + r, col0 + col) = column_part[r];
}

LevelComponents identity_components(const TriangularAlgebra& T) {
  return {Matrix::identity(T.dim_a()), Matrix(T.dim_a(), T.dim_b()), Matrix(T.dim_b(), T.dim_a()),
          Matrix::identity(T.dim_b()), Matrix::identity(T.dim_m()), zero_vector(T.dim_m())};
}

// Block form of one level given the components of all levels up to n.
Matrix assemble_level(const TriangularAlgebra& T, const CanonicalComponents& comps, std::size_t n) {
  const auto& bm = T.bimodule();
  const auto& c = comps.levels.at(n);
  const auto oa = T.offset(Slot::A);
  const auto om = T.offset(Slot::M);
  const auto ob = T.offset(Slot::B);
  Matrix L(T.dim(), T.dim());
  for (std::size_t k = 0; k < T.dim_a(); ++k) {
    const auto a = T.a().basis_vector(k);
    Vector mid = zero_vector(T.dim_m());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ci = comps.levels[i];
      const auto& mj = comps.levels[n - i].m;
      mid += bm.act_left(ci.f * a, mj);
      mid -= bm.act_right(mj, ci.q * a);
    }
    set_block(L, oa, oa, c.f * a, k);
    set_block(L, om, oa, mid, k);
    set_block(L, ob, oa, c.q * a, k);
  }
  for (std::size_t k = 0; k < T.dim_b(); ++k) {
    const auto b = T.b().basis_vector(k);
    Vector mid = zero_vector(T.dim_m());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ci = comps.levels[i];
      const auto& mj = comps.levels[n - i].m;
      mid += bm.act_left(ci.p * b, mj);
      mid -= bm.act_right(mj, ci.g * b);
    }
    set_block(L, oa, ob, c.p * b, k);
    set_block(L, om, ob, mid, k);
    set_block(L, ob, ob, c.g * b, k);
  }
  for (std::size_t j = 0; j < T.dim_m(); ++j) set_block(L, om, om, c.h.column(j), j);
  return L;
}

std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace

StructuralError::StructuralError(std::string identity, std::size_t level, std::vector<std::size_t> witness)
    : std::runtime_error([&] {
        std::string msg = "level " + std::to_string(level) + ": " + identity + " fails";
        if (!witness.empty()) {
          msg += " at basis (";
          for (std::size_t i = 0; i < witness.size(); ++i) msg += (i ? ", " : "") + std::to_string(witness[i]);
          msg += ")";
        }
        return msg;
      }()),
      identity_(std::move(identity)),
      level_(level),
      witness_(std::move(witness)) {}

CanonicalComponents extract_canonical(const TriangularAlgebra& T, const HigherMapSequence& L) {
  const auto d = T.dim();
  if (L.levels.empty()) throw StructuralError("L_0 = id", 0, {});
  for (std::size_t n = 0; n < L.levels.size(); ++n) {
    if (L.levels[n].rows() != d || L.levels[n].cols() != d) throw StructuralError("shape", n, {});
  }
  if (L.levels[0] != Matrix::identity(d)) throw StructuralError("L_0 = id", 0, {});

  const auto da = T.dim_a();
  const auto dm = T.dim_m();
  const auto db = T.dim_b();
  const auto oa = T.offset(Slot::A);
  const auto om = T.offset(Slot::M);
  const auto ob = T.offset(Slot::B);
  const auto center_a = center(T.a());
  const auto center_b = center(T.b());

  CanonicalComponents comps;
  comps.levels.push_back(identity_components(T));
  for (std::size_t n = 1; n < L.levels.size(); ++n) {
    const auto& Ln = L.levels[n];
    LevelComponents c;
    c.f = block(Ln, oa, da, oa, da);
    c.q = block(Ln, ob, db, oa, da);
    c.p = block(Ln, oa, da, ob, db);
    c.g = block(Ln, ob, db, ob, db);
    c.h = block(Ln, om, dm, om, dm);

    for (std::size_t j = 0; j < dm; ++j) {
      for (std::size_t r = 0; r < da; ++r) {
        if (sgn(Ln(oa + r, om + j)) != 0) throw StructuralError("pi_A L_n(m) = 0", n, {j});
      }
      for (std::size_t r = 0; r < db; ++r) {
        if (sgn(Ln(ob + r, om + j)) != 0) throw StructuralError("pi_B L_n(m) = 0", n, {j});
      }
    }
    for (std::size_t k = 0; k < da; ++k) {
      if (!center_b.contains(c.q.column(k))) throw StructuralError("q_n(a) in Z(B)", n, {k});
    }
    for (std::size_t k = 0; k < db; ++k) {
      if (!center_a.contains(c.p.column(k))) throw StructuralError("p_n(b) in Z(A)", n, {k});
    }
    for (auto [i, j] : basis_pairs(da)) {
      if (!is_zero(c.q * T.a().bracket(T.a().basis_vector(i), T.a().basis_vector(j)))) {
        throw StructuralError("q_n([a, a']) = 0", n, {i, j});
      }
    }
    for (auto [i, j] : basis_pairs(db)) {
      if (!is_zero(c.p * T.b().bracket(T.b().basis_vector(i), T.b().basis_vector(j)))) {
        throw StructuralError("p_n([b, b']) = 0", n, {i, j});
      }
    }

    Vector m = T.project(Ln * T.e(), Slot::M);
    for (std::size_t i = 1; i < n; ++i) {
      const auto& ci = comps.levels[i];
      const auto& mj = comps.levels[n - i].m;
      m -= T.bimodule().act_left(ci.f * T.a().unit(), mj);
      m += T.bimodule().act_right(mj, ci.q * T.a().unit());
    }
    c.m = std::move(m);
    comps.levels.push_back(std::move(c));

    const auto rebuilt = assemble_level(T, comps, n);
    for (std::size_t col = 0; col < d; ++col) {
      if (rebuilt.column(col) != Ln.column(col)) throw StructuralError("block form reconstructs L_n", n, {col});
    }
  }
  return comps;
}

HigherMapSequence reconstruct(const TriangularAlgebra& T, const CanonicalComponents& comps) {
  HigherMapSequence out{DerivationKind::lie_higher, {}};
  for (std::size_t n = 0; n < comps.levels.size(); ++n) {
    const auto& c = comps.levels[n];
    if (c.f.rows() != T.dim_a() || c.f.cols() != T.dim_a() || c.p.rows() != T.dim_a() ||
        c.p.cols() != T.dim_b() || c.q.rows() != T.dim_b() || c.q.cols() != T.dim_a() ||
        c.g.rows() != T.dim_b() || c.g.cols() != T.dim_b() || c.h.rows() != T.dim_m() ||
        c.h.cols() != T.dim_m() || c.m.size() != T.dim_m()) {
      throw std::invalid_argument("reconstruct: component shapes do not match the algebra at level " +
                                  std::to_string(n));
    }
    out.levels.push_back(assemble_level(T, comps, n));
  }
  return out;
}

ProperDecomposition decompose(const TriangularAlgebra& T, const HigherMapSequence& L) {
  return decompose(ExtendedTriangular::build(T), L);
}

ProperDecomposition decompose(const ExtendedTriangular& ext, const HigherMapSequence& L) {
  const auto& T = ext.base();
  const auto& E = ext.extended();
  auto comps = extract_canonical(T, L);

  ProperDecomposition dec{ext, comps, {}};
  const auto& a0 = ext.a0();
  const auto& b0 = ext.b0();
  const auto eoa = E.offset(Slot::A);
  const auto eom = E.offset(Slot::M);
  const auto eob = E.offset(Slot::B);
  const auto toa = T.offset(Slot::A);
  const auto tom = T.offset(Slot::M);
  const auto tob = T.offset(Slot::B);

  for (std::size_t n = 0; n < comps.levels.size(); ++n) {
    const auto& c = comps.levels[n];
    LevelDecomposition level{Matrix(E.dim(), T.dim()), Matrix(E.dim(), T.dim()),
                             Matrix(a0.dim(), T.dim_a()), Matrix(b0.dim(), T.dim_b())};

    for (std::size_t k = 0; k < T.dim_a(); ++k) {
      const auto a = T.a().basis_vector(k);
      const auto q = c.q * a;
      const auto shift = ext.tau_r_inv(q);
      level.d.set_column(k, ext.iota_a() * (c.f * a) - shift);
      set_block(level.chi, eoa, toa, shift, k);
      set_block(level.chi, eob, toa, ext.iota_b() * q, k);
    }
    for (std::size_t k = 0; k < T.dim_b(); ++k) {
      const auto b = T.b().basis_vector(k);
      const auto p = c.p * b;
      const auto shift = ext.tau_ell(p);
      level.d_prime.set_column(k, ext.iota_b() * (c.g * b) - shift);
      set_block(level.chi, eoa, tob, ext.iota_a() * p, k);
      set_block(level.chi, eob, tob, shift, k);
    }
    dec.levels.push_back(std::move(level));

    auto& cur = dec.levels.back();
    for (std::size_t k = 0; k < T.dim_a(); ++k) {
      Vector mid = zero_vector(T.dim_m());
      for (std::size_t i = 0; i < n; ++i) mid += a0.apply(dec.levels[i].d.column(k), comps.levels[n - i].m);
      set_block(cur.delta, eoa, toa, cur.d.column(k), k);
      set_block(cur.delta, eom, toa, mid, k);
    }
    for (std::size_t k = 0; k < T.dim_b(); ++k) {
      Vector mid = zero_vector(T.dim_m());
      for (std::size_t i = 0; i < n; ++i) {
        mid -= b0.apply(dec.levels[i].d_prime.column(k), comps.levels[n - i].m);
      }
      set_block(cur.delta, eom, tob, mid, k);
      set_block(cur.delta, eob, tob, cur.d_prime.column(k), k);
    }
    for (std::size_t j = 0; j < T.dim_m(); ++j) set_block(cur.delta, eom, tom, c.h.column(j), j);
  }
  return dec;
}

bool PropernessReport::ok() const {
  for (const auto& l : levels) {
    if (!l.ok()) return false;
  }
  return true;
}

std::size_t PropernessReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.violations.size();
  return n;
}

PropernessReport verify_properness(const TriangularAlgebra& T, const HigherMapSequence& L,
                                   const ProperDecomposition& dec) {
  const auto& ext = dec.extension;
  const auto& E = ext.extended();
  const auto& EA = E.algebra();
  const auto& bm = T.bimodule();
  const auto& a0 = ext.a0();
  const auto& b0 = ext.b0();
  PropernessReport report;

  const auto levels = dec.levels.size();
  if (L.levels.size() != levels || dec.components.levels.size() != levels) {
    LevelProperness lp;
    lp.residual_zero = false;
    lp.violations.push_back({"level count matches", {L.levels.size(), levels}, ""});
    report.levels.push_back(std::move(lp));
    return report;
  }

  // Elements e x f of the extension for every basis x.
  std::vector<Vector> corners;
  for (std::size_t i = 0; i < E.dim(); ++i) {
    corners.push_back(EA.multiply(EA.multiply(E.e(), EA.basis_vector(i)), E.f()));
  }

  for (std::size_t n = 0; n < levels; ++n) {
    LevelProperness lp;
    lp.level = n;
    auto fail = [&](bool& flag, std::string law, std::vector<std::size_t> witness) {
      if (flag) lp.violations.push_back({std::move(law), std::move(witness), "level " + std::to_string(n)});
      flag = false;
    };
    const auto& lev = dec.levels[n];

    if (ext.iota() * L.levels[n] - lev.delta - lev.chi != Matrix(E.dim(), T.dim())) {
      fail(lp.residual_zero, "iota L_n = Delta_n + chi_n", {n});
    }

    for (auto i = 0u; i < T.dim() && lp.delta_multiplicative; ++i) {
      for (auto j = 0u; j < T.dim(); ++j) {
        const auto lhs = lev.delta * T.algebra().basis_product(i, j);
        Vector rhs = zero_vector(E.dim());
        for (std::size_t a = 0; a <= n; ++a) {
          rhs += EA.multiply(dec.levels[a].delta.column(i), dec.levels[n - a].delta.column(j));
        }
        if (lhs != rhs) {
          fail(lp.delta_multiplicative, "Delta_n(xy) = sum Delta_i(x) Delta_j(y)", {i, j});
          break;
        }
      }
    }

    for (std::size_t col = 0; col < T.dim(); ++col) {
      const auto c = lev.chi.column(col);
      bool central = true;
      for (std::size_t u = 0; u < E.dim() && central; ++u) {
        const auto bu = EA.basis_vector(u);
        central = EA.multiply(c, bu) == EA.multiply(bu, c);
      }
      bool corner = is_zero(E.project(c, Slot::M));
      for (std::size_t u = 0; u < corners.size() && corner; ++u) {
        corner = EA.multiply(c, corners[u]) == EA.multiply(corners[u], c);
      }
      if (!central) fail(lp.chi_central, "chi_n(x) in Z(extension)", {col});
      if (!corner) fail(lp.chi_central_corner_form, "chi_n(x) c.exf = exf.c", {col});
    }
    if (lp.chi_central != lp.chi_central_corner_form) {
      lp.violations.push_back({"centrality criteria agree", {n}, "commutant and corner tests disagree"});
    }

    for (auto [i, j] : basis_pairs(T.dim())) {
      const auto comm = T.algebra().basis_product(i, j) - T.algebra().basis_product(j, i);
      if (!is_zero(lev.chi * comm)) {
        fail(lp.chi_kills_commutators, "chi_n([x, y]) = 0", {i, j});
        break;
      }
    }

    const auto& comps = dec.components.levels;
    for (std::size_t k = 0; k < T.dim_a() && lp.h_left_compatible; ++k) {
      const auto a = T.a().basis_vector(k);
      for (std::size_t j = 0; j < T.dim_m(); ++j) {
        const auto m = unit_vector(T.dim_m(), j);
        Vector rhs = zero_vector(T.dim_m());
        for (std::size_t i = 0; i <= n; ++i) rhs += a0.apply(dec.levels[i].d.column(k), comps[n - i].h * m);
        if (comps[n].h * bm.act_left(a, m) != rhs) {
          fail(lp.h_left_compatible, "h_n(am) = sum d_i(a) h_j(m)", {k, j});
          break;
        }
      }
    }
    for (std::size_t k = 0; k < T.dim_b() && lp.h_right_compatible; ++k) {
      const auto b = T.b().basis_vector(k);
      for (std::size_t j = 0; j < T.dim_m(); ++j) {
        const auto m = unit_vector(T.dim_m(), j);
        Vector rhs = zero_vector(T.dim_m());
        for (std::size_t i = 0; i <= n; ++i) {
          rhs += b0.apply(dec.levels[n - i].d_prime.column(k), comps[i].h * m);
        }
        if (comps[n].h * bm.act_right(m, b) != rhs) {
          fail(lp.h_right_compatible, "h_n(mb) = sum h_i(m) d'_j(b)", {j, k});
          break;
        }
      }
    }

    for (auto [i, j] : basis_pairs(T.dim_a())) {
      const auto lhs = lev.d * T.a().basis_product(i, j);
      Vector rhs = zero_vector(a0.dim());
      for (std::size_t p = 0; p <= n; ++p) {
        rhs += a0.algebra().multiply(dec.levels[p].d.column(i), dec.levels[n - p].d.column(j));
      }
      if (lhs != rhs) {
        fail(lp.d_multiplicative, "d_n(aa') = sum d_p(a) d_q(a')", {i, j});
        break;
      }
    }
    for (auto [i, j] : basis_pairs(T.dim_b())) {
      const auto lhs = lev.d_prime * T.b().basis_product(i, j);
      Vector rhs = zero_vector(b0.dim());
      for (std::size_t p = 0; p <= n; ++p) {
        rhs += b0.algebra().multiply(dec.levels[p].d_prime.column(i), dec.levels[n - p].d_prime.column(j));
      }
      if (lhs != rhs) {
        fail(lp.d_prime_multiplicative, "d'_n(bb') = sum d'_p(b) d'_q(b')", {i, j});
        break;
      }
    }
    report.levels.push_back(std::move(lp));
  }
  return report;
}

PairSearchReport search_proper_pairs(const ExtendedTriangular& ext, const HigherMapSequence& L,
                                     std::size_t commutator_arity) {
  if (commutator_arity != 2 && commutator_arity != 3) {
    throw std::invalid_argument("search_proper_pairs: commutator arity must be 2 or 3");
  }
  const auto& T = ext.base();
  const auto& TA = T.algebra();
  const auto& E = ext.extended();
  const auto& EA = E.algebra();
  const auto d = T.dim();
  const auto de = E.dim();
  const auto zbasis = center(EA).vectors();
  const auto r = zbasis.size();

  // Unknown chi_n = sum_s z_s (x) C[s][.], with C[s][c] in column s * d + c.
  std::vector<Vector> commutators;
  if (commutator_arity == 2) {
    for (auto [i, j] : basis_pairs(d)) commutators.push_back(TA.bracket(TA.basis_vector(i), TA.basis_vector(j)));
  } else {
    for (auto [i, j] : basis_pairs(d)) {
      const auto inner = TA.bracket(TA.basis_vector(i), TA.basis_vector(j));
      for (std::size_t l = 0; l < d; ++l) commutators.push_back(TA.bracket(inner, TA.basis_vector(l)));
    }
  }

  // Products of center basis elements with embedded basis elements.
  std::vector<std::vector<Vector>> z_times_x(r), x_times_z(r);
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto x = ext.iota().column(j);
      z_times_x[s].push_back(EA.multiply(zbasis[s], x));
      x_times_z[s].push_back(EA.multiply(x, zbasis[s]));
    }
  }

  const std::size_t mult_rows = d * d * de;
  Matrix coeffs(mult_rows + commutators.size() * de, r * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& prod = TA.basis_product(i, j);
      for (std::size_t row = 0; row < de; ++row) {
        const auto R = (i * d + j) * de + row;
        for (std::size_t s = 0; s < r; ++s) {
          for (std::size_t c = 0; c < d; ++c) {
            if (sgn(prod[c]) != 0) coeffs(R, s * d + c) -= prod[c] * zbasis[s][row];
          }
          coeffs(R, s * d + i) += z_times_x[s][j][row];
          coeffs(R, s * d + j) += x_times_z[s][i][row];
        }
      }
    }
  }
  for (std::size_t t = 0; t < commutators.size(); ++t) {
    for (std::size_t row = 0; row < de; ++row) {
      const auto R = mult_rows + t * de + row;
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t c = 0; c < d; ++c) coeffs(R, s * d + c) = commutators[t][c] * zbasis[s][row];
    }
  }

  PairSearchReport report;
  report.commutator_arity = commutator_arity;
  std::vector<Matrix> deltas{ext.iota()};
  for (std::size_t n = 1; n < L.levels.size(); ++n) {
    const Matrix lifted = ext.iota() * L.levels[n];
    Vector offset(coeffs.rows(), Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
      const auto xi = ext.iota().column(i);
      for (std::size_t j = 0; j < d; ++j) {
        const auto xj = ext.iota().column(j);
        Vector rhs = zero_vector(de);
        for (std::size_t a = 1; a < n; ++a) rhs += EA.multiply(deltas[a].column(i), deltas[n - a].column(j));
        rhs -= lifted * TA.basis_product(i, j);
        rhs += EA.multiply(lifted.column(i), xj);
        rhs += EA.multiply(xi, lifted.column(j));
        for (std::size_t row = 0; row < de; ++row) offset[(i * d + j) * de + row] = rhs[row];
      }
    }
    const auto solution = solve_affine(coeffs, offset);
    PairSearchLevel level{n, !solution.empty(), solution.homogeneous.dim()};
    report.levels.push_back(level);
    if (!level.found) {
      report.stopped_early = true;
      break;
    }
    Matrix chi(de, d);
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t c = 0; c < d; ++c) {
        const auto& coeff = (*solution.particular)[s * d + c];
        if (sgn(coeff) == 0) continue;
        for (std::size_t row = 0; row < de; ++row) chi(row, c) += coeff * zbasis[s][row];
      }
    }
    deltas.push_back(lifted - chi);
  }
  return report;
}

ConjectureProbe probe_conjecture(const TriangularAlgebra& T, const HigherMapSequence& L, experimental_t) {
  ConjectureProbe probe;
  const auto ext = ExtendedTriangular::build(T);
  probe.search = search_proper_pairs(ext, L, 3);
  try {
    extract_canonical(T, L);
    probe.lie_canonical_form = true;
  } catch (const StructuralError& e) {
    probe.canonical_form_note = e.what();
  }
  return probe;
}

}  // namespace trider
