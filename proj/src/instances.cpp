#include "hsa/instances.hpp"

#include <algorithm>

namespace hsa {

namespace {

Scalar half() { return Scalar::ratio(1, 2); }

// ---------------------------------------------------------------- matrices

struct Mat2e {
  std::array<std::array<Element, 2>, 2> m;
};

Mat2e mat2_zero(const std::shared_ptr<const Presentation>& p) {
  Mat2e a;
  for (auto& row : a.m)
    for (auto& e : row) e = Element::zero(p);
  return a;
}

Mat2e mat2_identity(const std::shared_ptr<const Presentation>& p) {
  Mat2e a = mat2_zero(p);
  a.m[0][0] = Element::unit(p);
  a.m[1][1] = Element::unit(p);
  return a;
}

Mat2e mat2_lift(const std::shared_ptr<const Presentation>& p, const Mat2s& s) {
  Mat2e a = mat2_zero(p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a.m[i][j] = Element::unit(p).scaled(s[i][j]);
  return a;
}

Mat2e matmul(const Mat2e& a, const Mat2e& b) {
  auto p = a.m[0][0].presentation();
  Mat2e c = mat2_zero(p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
  return c;
}

Mat2e mat_add(const Mat2e& a, const Mat2e& b) {
  Mat2e c = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] += b.m[i][j];
  return c;
}

Mat2e mat_sub(const Mat2e& a, const Mat2e& b) {
  Mat2e c = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] = c.m[i][j] - b.m[i][j];
  return c;
}

Mat2e mat_scale(const Mat2e& a, const Scalar& s) {
  Mat2e c = a;
  for (auto& row : c.m)
    for (auto& e : row) e = e.scaled(s);
  return c;
}

Mat2e mat_transpose(const Mat2e& a) {
  Mat2e c = a;
  std::swap(c.m[0][1], c.m[1][0]);
  return c;
}

// adjugate; the inverse whenever the determinant reduces to 1
Mat2e mat_adj(const Mat2e& a) {
  Mat2e c = mat2_zero(a.m[0][0].presentation());
  c.m[0][0] = a.m[1][1];
  c.m[0][1] = -a.m[0][1];
  c.m[1][0] = -a.m[1][0];
  c.m[1][1] = a.m[0][0];
  return c;
}

Mat2e mat_comm(const Mat2e& a, const Mat2e& b) {
  return mat_sub(matmul(a, b), matmul(b, a));
}

// ------------------------------------------------------- hopf table helpers

TensorElement primitive_coproduct(const std::shared_ptr<const Presentation>& p, GenId g) {
  TensorElement t = TensorElement::zero({p, p});
  t.add_term(WordTuple{{Word::single(g), Word::unit()}}, Scalar::one());
  t.add_term(WordTuple{{Word::unit(), Word::single(g)}}, Scalar::one());
  return t;
}

void fill_primitive(HopfStructure& h) {
  const auto& p = h.algebra;
  for (GenId g = 0; g < p->size(); ++g) {
    h.coproduct_table.push_back(primitive_coproduct(p, g));
    h.counit_table.push_back(Scalar::zero());
    h.antipode_table.push_back(-Element::generator(p, g));
  }
}

}  // namespace

SpinorConventions spinor_conventions() {
  SpinorConventions c;
  const Scalar o = Scalar::one(), z = Scalar::zero(), i = Scalar::i();
  c.sigma[0] = {{{o, z}, {z, o}}};
  c.sigma[1] = {{{z, o}, {o, z}}};
  c.sigma[2] = {{{z, -i}, {i, z}}};
  c.sigma[3] = {{{o, z}, {z, -o}}};
  c.sigma_bar[0] = c.sigma[0];
  for (int k = 1; k < 4; ++k) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) c.sigma_bar[k][a][b] = -c.sigma[k][a][b];
  }
  c.epsilon = {{{z, o}, {-o, z}}};
  c.metric = {+1, -1, -1, -1};
  return c;
}

// ------------------------------------------------------ classical instance

namespace {

// index of M_{mu nu} (mu < nu) in the generator list
int m_index(int mu, int nu) {
  static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  (void)table;
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b, ++k)
      if (a == mu && b == nu) return k;
  return -1;
}

// [M_{mu nu}, M_{rho si}] as a signed combination of basis generators
void add_lorentz_bracket(std::vector<std::pair<Word, Scalar>>& out, int mu, int nu, int rho,
                        int si, const Scalar& coeff, const std::array<int, 4>& eta) {
  auto emit = [&](int a, int b, const Scalar& c) {
    if (a == b) return;
    Scalar cc = c;
    if (a > b) {
      std::swap(a, b);
      cc = -cc;
    }
    out.push_back({Word::single(static_cast<GenId>(m_index(a, b))), cc});
  };
  const Scalar i = Scalar::i();
  // i (eta_{nu rho} M_{mu si} - eta_{mu rho} M_{nu si}
  //    - eta_{nu si} M_{mu rho} + eta_{mu si} M_{nu rho})
  if (nu == rho) emit(mu, si, coeff * i * Scalar(eta[nu]));
  if (mu == rho) emit(nu, si, -(coeff * i * Scalar(eta[mu])));
  if (nu == si) emit(mu, rho, -(coeff * i * Scalar(eta[nu])));
  if (mu == si) emit(nu, rho, coeff * i * Scalar(eta[mu]));
}

}  // namespace

BicrossData make_classical_poincare() {
  const auto eta = spinor_conventions().metric;

  // H1: the Lorentz enveloping algebra on M_{mu nu}, mu < nu
  std::vector<GeneratorDecl> mgens;
  std::vector<std::pair<int, int>> mpairs;
  {
    int k = 0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu, ++k) {
        mgens.push_back({"M" + std::to_string(mu) + std::to_string(nu), 0, k});
        mpairs.push_back({mu, nu});
      }
    }
  }
  std::vector<RawRule> mrules;
  for (GenId a = 0; a < mgens.size(); ++a) {
    for (GenId b = 0; b < a; ++b) {
      RawRule r{a, b, {{Word({b, a}), Scalar::one()}}};
      add_lorentz_bracket(r.rhs, mpairs[a].first, mpairs[a].second, mpairs[b].first,
                          mpairs[b].second, Scalar::one(), eta);
      mrules.push_back(std::move(r));
    }
  }
  HopfStructure h1;
  h1.name = "lorentz";
  h1.algebra = Presentation::create(std::move(mgens), std::move(mrules));
  fill_primitive(h1);
  h1.validate();

  // H2: commuting momenta
  std::vector<GeneratorDecl> pgens;
  for (int mu = 0; mu < 4; ++mu) pgens.push_back({"P" + std::to_string(mu), 0, mu});
  std::vector<RawRule> prules;
  for (GenId a = 0; a < 4; ++a)
    for (GenId b = 0; b < a; ++b) prules.push_back({a, b, {{Word({b, a}), Scalar::one()}}});
  HopfStructure h2;
  h2.name = "momenta";
  h2.algebra = Presentation::create(std::move(pgens), std::move(prules));
  fill_primitive(h2);
  h2.validate();

  BicrossData d;
  d.name = "classical_poincare";
  d.h1 = h1;
  d.h2 = h2;
  // P_rho <| M_{mu nu} = [P_rho, M_{mu nu}] = -i (eta_{nu rho} P_mu - eta_{mu rho} P_nu)
  d.action.entries.resize(4);
  for (GenId rho = 0; rho < 4; ++rho) {
    for (size_t k = 0; k < mpairs.size(); ++k) {
      auto [mu, nu] = mpairs[k];
      Element e = Element::zero(h2.algebra);
      const Scalar mi = -Scalar::i();
      if (nu == static_cast<int>(rho))
        e += Element::generator(h2.algebra, static_cast<GenId>(mu)).scaled(mi * Scalar(eta[nu]));
      if (mu == static_cast<int>(rho))
        e += Element::generator(h2.algebra, static_cast<GenId>(nu)).scaled(-(mi * Scalar(eta[mu])));
      d.action.entries[rho].push_back(e);
    }
  }
  d.coaction = trivial_coaction(h1, h2);
  d.validate();
  return d;
}

// -------------------------------------------------------- deformed factors

HopfStructure make_chiral_superspace(const Scalar& kappa_inv) {
  std::vector<GeneratorDecl> gens;
  for (int mu = 0; mu < 4; ++mu) gens.push_back({"z" + std::to_string(mu), 0, mu});
  gens.push_back({"th1", 1, 4});
  gens.push_back({"th2", 1, 5});

  const Scalar i = Scalar::i();
  std::vector<RawRule> rules;
  // [z0, zi] = -i/kappa zi  ->  zi z0 = z0 zi + (i/kappa) zi
  for (GenId zi = 1; zi <= 3; ++zi)
    rules.push_back({zi, 0, {{Word({0, zi}), Scalar::one()}, {Word::single(zi), i * kappa_inv}}});
  for (GenId zj = 2; zj <= 3; ++zj)
    for (GenId zi = 1; zi < zj; ++zi)
      rules.push_back({zj, zi, {{Word({zi, zj}), Scalar::one()}}});
  // [z0, th] = -i/(2 kappa) th ; [zi, th] = 0
  for (GenId th = 4; th <= 5; ++th) {
    rules.push_back({th, 0, {{Word({0, th}), Scalar::one()}, {Word::single(th), i * half() * kappa_inv}}});
    for (GenId zi = 1; zi <= 3; ++zi)
      rules.push_back({th, zi, {{Word({zi, th}), Scalar::one()}}});
  }
  rules.push_back({5, 4, {{Word({4, 5}), -Scalar::one()}}});
  rules.push_back({4, 4, {}});
  rules.push_back({5, 5, {}});

  HopfStructure h;
  h.name = "chiral_superspace";
  h.algebra = Presentation::create(std::move(gens), std::move(rules));
  fill_primitive(h);
  h.validate();
  return h;
}

HopfStructure make_chiral_superspace() { return make_chiral_superspace(Scalar::kappa(-1)); }

namespace {

struct LorentzIds {
  // [row][col] generator ids of the matrix entries
  std::array<std::array<GenId, 2>, 2> A, Ab;
  std::array<GenId, 2> tb{};
  bool has_tb = false;
};

LorentzIds lorentz_ids(const Presentation& p) {
  LorentzIds ids;
  auto need = [&](const std::string& n) {
    auto g = p.find(n);
    if (!g) throw Error(Errc::UndeclaredGenerator, "missing generator " + n);
    return *g;
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      ids.A[a][b] = need("A" + std::to_string(a + 1) + std::to_string(b + 1));
      ids.Ab[a][b] = need("Ab" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  if (p.find("tb1")) {
    ids.tb = {need("tb1"), need("tb2")};
    ids.has_tb = true;
  }
  return ids;
}

Mat2e mat_from_ids(const std::shared_ptr<const Presentation>& p,
                   const std::array<std::array<GenId, 2>, 2>& ids) {
  Mat2e a = mat2_zero(p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a.m[i][j] = Element::generator(p, ids[i][j]);
  return a;
}

/// generator declarations and rules shared by the graded and the even-only
/// Lorentz function algebras; off-diagonal entries come first so the
/// determinant rules orient downward
void lorentz_gens_rules(bool with_tb, std::vector<GeneratorDecl>& gens,
                        std::vector<RawRule>& rules) {
  auto entry_names = [](const std::string& stem) {
    return std::vector<std::string>{stem + "12", stem + "21", stem + "11", stem + "22"};
  };
  int order = 0;
  for (const auto& n : entry_names("A")) gens.push_back({n, 0, order++});
  for (const auto& n : entry_names("Ab")) gens.push_back({n, 0, order++});
  const GenId even_count = static_cast<GenId>(gens.size());
  if (with_tb) {
    gens.push_back({"tb1", 1, order++});
    gens.push_back({"tb2", 1, order++});
  }

  for (GenId a = 0; a < even_count; ++a)
    for (GenId b = 0; b < a; ++b) rules.push_back({a, b, {{Word({b, a}), Scalar::one()}}});
  // det A = 1 and det Ab = 1, oriented diagonal -> off-diagonal
  auto det_rule = [&](GenId a12, GenId a21, GenId a11, GenId a22) {
    rules.push_back({a11, a22, {{Word::unit(), Scalar::one()}, {Word({a12, a21}), Scalar::one()}}});
  };
  det_rule(0, 1, 2, 3);
  det_rule(4, 5, 6, 7);
  if (with_tb) {
    const GenId tb1 = even_count, tb2 = static_cast<GenId>(even_count + 1);
    for (GenId x = 0; x < even_count; ++x) {
      rules.push_back({tb1, x, {{Word({x, tb1}), Scalar::one()}}});
      rules.push_back({tb2, x, {{Word({x, tb2}), Scalar::one()}}});
    }
    rules.push_back({tb2, tb1, {{Word({tb1, tb2}), -Scalar::one()}}});
    rules.push_back({tb1, tb1, {}});
    rules.push_back({tb2, tb2, {}});
  }
}

void fill_lorentz_tables(HopfStructure& h) {
  const auto& p = h.algebra;
  const LorentzIds ids = lorentz_ids(*p);
  h.coproduct_table.resize(p->size(), TensorElement::zero({p, p}));
  h.counit_table.resize(p->size());
  h.antipode_table.resize(p->size(), Element::zero(p));

  Mat2e A = mat_from_ids(p, ids.A), Ab = mat_from_ids(p, ids.Ab);
  Mat2e adjA = mat_adj(A), adjAb = mat_adj(Ab);

  auto group_like = [&](const std::array<std::array<GenId, 2>, 2>& e) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        TensorElement t = TensorElement::zero({p, p});
        for (int c = 0; c < 2; ++c)
          t.add_term(WordTuple{{Word::single(e[a][c]), Word::single(e[c][b])}}, Scalar::one());
        h.coproduct_table[e[a][b]] = t;
        h.counit_table[e[a][b]] = a == b ? Scalar::one() : Scalar::zero();
      }
    }
  };
  group_like(ids.A);
  group_like(ids.Ab);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      h.antipode_table[ids.A[a][b]] = adjA.m[a][b];
      h.antipode_table[ids.Ab[a][b]] = adjAb.m[a][b];
    }

  if (ids.has_tb) {
    // The inverse-matrix factor enters with transposed entries, like the
    // theta coaction; the plain entry order fails coassociativity.
    for (int a = 0; a < 2; ++a) {
      TensorElement t = TensorElement::zero({p, p});
      t.add_term(WordTuple{{Word::single(ids.tb[a]), Word::unit()}}, Scalar::one());
      for (int b = 0; b < 2; ++b) {
        for (const auto& [w, c] : adjAb.m[b][a].terms())
          t.add_term(WordTuple{{w, Word::single(ids.tb[b])}}, c);
      }
      h.coproduct_table[ids.tb[a]] = t;
      h.counit_table[ids.tb[a]] = Scalar::zero();
      // S(tb_a) = -Ab_{ba} tb_b, forced by the antipode axiom
      Element s = Element::zero(p);
      for (int b = 0; b < 2; ++b)
        s += Element::monomial(p, Word({ids.Ab[b][a], ids.tb[b]}), -Scalar::one());
      h.antipode_table[ids.tb[a]] = s;
    }
  }
}

}  // namespace

HopfStructure make_super_lorentz() {
  std::vector<GeneratorDecl> gens;
  std::vector<RawRule> rules;
  lorentz_gens_rules(true, gens, rules);
  HopfStructure h;
  h.name = "super_lorentz";
  h.algebra = Presentation::create(std::move(gens), std::move(rules));
  fill_lorentz_tables(h);
  h.validate();
  return h;
}

std::array<std::array<Element, 4>, 4> lorentz_vector_rep(
    const SpinorConventions& conv, const std::shared_ptr<const Presentation>& lorentz) {
  const LorentzIds ids = lorentz_ids(*lorentz);
  Mat2e A = mat_from_ids(lorentz, ids.A);
  Mat2e Adag = mat_transpose(mat_from_ids(lorentz, ids.Ab));

  std::array<std::array<Element, 4>, 4> L;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Element acc = Element::zero(lorentz);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) {
              Scalar coeff =
                  conv.sigma_bar[mu][a][b] * conv.sigma[nu][c][d] * Scalar(conv.metric[nu]);
              if (coeff.is_zero()) continue;
              acc += (A.m[b][c] * Adag.m[d][a]).scaled(coeff * half());
            }
      L[mu][nu] = acc;
    }
  }
  return L;
}

// ----------------------------------------------------- deformed action data

namespace {

struct KappaMatrices {
  std::shared_ptr<const Presentation> p;
  LorentzIds ids;
  Mat2e A, Ab, Adag, AdagA, AAdag, invAdagA, invAAdag;
  std::array<std::array<Element, 4>, 4> L;
  SpinorConventions conv;

  explicit KappaMatrices(const std::shared_ptr<const Presentation>& pres)
      : p(pres), ids(lorentz_ids(*pres)) {
    conv = spinor_conventions();
    A = mat_from_ids(p, ids.A);
    Ab = mat_from_ids(p, ids.Ab);
    Adag = mat_transpose(Ab);
    AdagA = matmul(Adag, A);
    AAdag = matmul(A, Adag);
    invAdagA = mat_adj(AdagA);
    invAAdag = mat_adj(AAdag);
    L = lorentz_vector_rep(conv, p);
  }

  Mat2e sigma(int mu) const { return mat2_lift(p, conv.sigma[mu]); }
};

/// action rows of the Lorentz-sector generators; shared by the graded and
/// the even-only instances
void fill_lorentz_action_rows(ActionTable& table, const KappaMatrices& mx,
                              const HopfStructure& h1, const Scalar& kappa_inv,
                              const KappaVariants& v) {
  const auto& p1 = h1.algebra;
  const auto& p2 = mx.p;
  const size_t n1 = p1->size();
  auto zero1 = [&] { return Element::zero(p2); };

  auto set_entry = [&](GenId a2, GenId g1, const Element& e) { table.entries[a2][g1] = e; };

  for (GenId g = 0; g < static_cast<GenId>(n1); ++g) {
    const std::string gname = p1->name_of(g);
    const bool is_z = gname[0] == 'z';
    const int mu = is_z ? gname[1] - '0' : -1;

    auto side = [&](const Mat2e& m, int k, bool sigma_left) {
      return sigma_left ? matmul(mx.sigma(k), m) : matmul(m, mx.sigma(k));
    };
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Element ea = zero1(), eab = zero1();
        if (is_z && mu >= 1) {
          // A <| z_i = s/2k [ sum_k (A sigma^k) L(i,k) - sigma^i A ]
          for (int k = 1; k <= 3; ++k) {
            const Element& lam = v.lam_a_zi_transposed ? mx.L[k][mu] : mx.L[mu][k];
            ea += side(mx.A, k, v.a_zi_sigma_left).m[a][b] * lam;
          }
          ea = ea - side(mx.A, mu, v.a_zi_bare_left).m[a][b];
          ea = ea.scaled(half() * kappa_inv * Scalar(v.sign_a_zi));
          for (int k = 1; k <= 3; ++k) {
            const Element& lam = v.lam_ab_zi_transposed ? mx.L[k][mu] : mx.L[mu][k];
            eab += side(mx.Ab, k, v.ab_zi_sigma_left).m[a][b] * lam;
          }
          eab = eab - side(mx.Ab, mu, v.ab_zi_bare_left).m[a][b];
          eab = eab.scaled(half() * kappa_inv * Scalar(v.sign_ab_zi));
        } else if (is_z && mu == 0) {
          for (int k = 1; k <= 3; ++k) {
            const Element& lam = v.lam_a_z0_row ? mx.L[k][0] : mx.L[0][k];
            ea += side(mx.A, k, v.a_z0_sigma_left).m[a][b] * lam;
          }
          ea = ea.scaled(half() * kappa_inv * Scalar(v.sign_a_z0));
          for (int k = 1; k <= 3; ++k) {
            const Element& lam = v.lam_ab_z0_row ? mx.L[k][0] : mx.L[0][k];
            eab += side(mx.Ab, k, v.ab_z0_sigma_left).m[a][b] * lam;
          }
          eab = eab.scaled(half() * kappa_inv * Scalar(v.sign_ab_z0));
        }
        set_entry(mx.ids.A[a][b], g, ea);
        set_entry(mx.ids.Ab[a][b], g, eab);
      }
    }
  }
}

}  // namespace

BicrossData make_kappa_action_coaction_variant(const Scalar& kappa_inv,
                                               const KappaVariants& v) {
  BicrossData d;
  d.name = "kappa_poincare_supergroup";
  d.h1 = make_chiral_superspace(kappa_inv);
  d.h2 = make_super_lorentz();
  const auto& p1 = d.h1.algebra;
  const auto& p2 = d.h2.algebra;
  KappaMatrices mx(p2);

  d.action.entries.assign(p2->size(), std::vector<Element>(p1->size(), Element::zero(p2)));
  fill_lorentz_action_rows(d.action, mx, d.h1, kappa_inv, v);

  const Scalar c = -(Scalar::i() * half() * kappa_inv);
  Mat2e M_zi = v.tt_zi_dagger_left ? (v.tt_zi_inverse ? mx.invAdagA : mx.AdagA)
                                   : (v.tt_zi_inverse ? mx.invAAdag : mx.AAdag);
  M_zi = mat_sub(mat2_identity(p2), M_zi);
  Mat2e M_z0 = v.tt_z0_dagger_left ? mx.AdagA : mx.AAdag;
  if (v.tt_z0_inverse) M_z0 = mat_adj(M_z0);
  Mat2e M_tt = mat_sub(mat2_identity(p2), v.tt_th_dagger_left ? mx.invAdagA : mx.invAAdag);

  for (int a = 0; a < 2; ++a) {
    for (GenId g = 0; g < p1->size(); ++g) {
      const std::string gname = p1->name_of(g);
      Element e = Element::zero(p2);
      if (gname[0] == 'z') {
        int mu = gname[1] - '0';
        const Mat2e& M = mu == 0 ? M_z0 : M_zi;
        for (int b = 0; b < 2; ++b)
          e += M.m[a][b] * Element::generator(p2, mx.ids.tb[b]);
        e = e.scaled(c * Scalar(mu == 0 ? v.tt_z0_sign : v.tt_zi_sign));
      } else {
        int beta = gname[2] - '1';
        e = (v.tt_th_transposed ? M_tt.m[beta][a] : M_tt.m[a][beta])
                .scaled(c * Scalar(v.tt_th_sign));
      }
      d.action.entries[mx.ids.tb[a]][g] = e;
    }
  }

  // coaction
  d.coaction.entries.assign(p1->size(), TensorElement::zero({p2, p1}));
  Mat2e adjA = mat_adj(mx.A);
  for (GenId g = 0; g < p1->size(); ++g) {
    const std::string gname = p1->name_of(g);
    TensorElement t = TensorElement::zero({p2, p1});
    if (gname[0] == 'z') {
      int mu = gname[1] - '0';
      for (int nu = 0; nu < 4; ++nu) {
        Element lam = v.co_lambda_transposed ? mx.L[nu][mu] : mx.L[mu][nu];
        if (v.co_lambda_metric)
          lam = lam.scaled(Scalar(mx.conv.metric[mu] * mx.conv.metric[nu]));
        auto znu = p1->find("z" + std::to_string(nu));
        for (const auto& [w, cc] : lam.terms())
          t.add_term(WordTuple{{w, Word::single(*znu)}}, cc);
      }
      Mat2e smu = mx.sigma(mu);
      if (v.co_sigma_lower) smu = mat_scale(smu, Scalar(mx.conv.metric[mu]));
      Mat2e Asig = matmul(adjA, smu);
      const Scalar odd_coeff = Scalar::i() * Scalar(v.co_theta_sign);
      for (int al = 0; al < 2; ++al) {
        auto tha = p1->find(std::string("th") + char('1' + al));
        Element slot1 = Element::zero(p2);
        for (int bd = 0; bd < 2; ++bd)
          slot1 += Asig.m[al][bd] * Element::generator(p2, mx.ids.tb[bd]);
        for (const auto& [w, cc] : slot1.terms())
          t.add_term(WordTuple{{w, Word::single(*tha)}}, cc * odd_coeff);
      }
    } else {
      int al = gname[2] - '1';
      for (int be = 0; be < 2; ++be) {
        auto thb = p1->find(std::string("th") + char('1' + be));
        for (const auto& [w, cc] : adjA.m[be][al].terms())
          t.add_term(WordTuple{{w, Word::single(*thb)}}, cc);
      }
    }
    d.coaction.entries[g] = t;
  }

  d.validate();
  return d;
}

BicrossData make_kappa_action_coaction(const Scalar& kappa_inv) {
  return make_kappa_action_coaction_variant(kappa_inv, KappaVariants{});
}

BicrossData make_kappa_action_coaction() {
  return make_kappa_action_coaction(Scalar::kappa(-1));
}

BicrossData make_kappa_bosonic(const Scalar& kappa_inv) {
  BicrossData d;
  d.name = "kappa_poincare_group";

  std::vector<GeneratorDecl> zgens;
  for (int mu = 0; mu < 4; ++mu) zgens.push_back({"z" + std::to_string(mu), 0, mu});
  std::vector<RawRule> zrules;
  const Scalar i = Scalar::i();
  for (GenId zi = 1; zi <= 3; ++zi)
    zrules.push_back({zi, 0, {{Word({0, zi}), Scalar::one()}, {Word::single(zi), i * kappa_inv}}});
  for (GenId zj = 2; zj <= 3; ++zj)
    for (GenId zi = 1; zi < zj; ++zi)
      zrules.push_back({zj, zi, {{Word({zi, zj}), Scalar::one()}}});
  d.h1.name = "kappa_translations";
  d.h1.algebra = Presentation::create(std::move(zgens), std::move(zrules));
  fill_primitive(d.h1);
  d.h1.validate();

  std::vector<GeneratorDecl> lgens;
  std::vector<RawRule> lrules;
  lorentz_gens_rules(false, lgens, lrules);
  d.h2.name = "lorentz_functions";
  d.h2.algebra = Presentation::create(std::move(lgens), std::move(lrules));
  fill_lorentz_tables(d.h2);
  d.h2.validate();

  KappaMatrices mx(d.h2.algebra);
  d.action.entries.assign(d.h2.algebra->size(),
                          std::vector<Element>(d.h1.algebra->size(), Element::zero(d.h2.algebra)));
  fill_lorentz_action_rows(d.action, mx, d.h1, kappa_inv, KappaVariants{});

  d.coaction.entries.assign(d.h1.algebra->size(),
                            TensorElement::zero({d.h2.algebra, d.h1.algebra}));
  const KappaVariants v{};
  for (GenId g = 0; g < d.h1.algebra->size(); ++g) {
    TensorElement t = TensorElement::zero({d.h2.algebra, d.h1.algebra});
    int mu = d.h1.algebra->name_of(g)[1] - '0';
    for (int nu = 0; nu < 4; ++nu) {
      Element lam = v.co_lambda_transposed ? mx.L[nu][mu] : mx.L[mu][nu];
      if (v.co_lambda_metric)
        lam = lam.scaled(Scalar(mx.conv.metric[mu] * mx.conv.metric[nu]));
      for (const auto& [w, cc] : lam.terms())
        t.add_term(WordTuple{{w, Word::single(static_cast<GenId>(nu))}}, cc);
    }
    d.coaction.entries[g] = t;
  }
  d.validate();
  return d;
}

InstanceBundle build_kappa_poincare_supergroup(int degree, int samples, std::uint64_t seed) {
  InstanceBundle bundle;
  bundle.data = make_kappa_action_coaction();
  bundle.report.merge(check_module_algebra(bundle.data, degree, samples, seed));
  bundle.report.merge(check_comodule_coalgebra(bundle.data, degree, samples, seed));
  bundle.report.merge(check_compatibility(bundle.data, degree, samples, seed));
  if (!bundle.report.all_pass())
    throw Error(Errc::CompatibilityFailed,
                std::to_string(bundle.report.fail_count()) + " condition(s) failed:\n" +
                    bundle.report.failure_summary());
  bundle.built = build_bicrossproduct(bundle.data, /*bypass_checks=*/true);
  bundle.report.merge(verify_built(bundle.data, bundle.built, degree, samples, seed));
  bundle.report.sort();

  bundle.conventions["metric"] = "+---";
  bundle.conventions["sigma"] = "sigma^mu=(1,pauli); sigma_bar^mu=(1,-pauli); lowered with the metric";
  bundle.conventions["dagger"] = "Adag[a][b] = Ab[b][a], index transposition only";
  bundle.conventions["inverses"] = "adjugates under det A = det Ab = 1";
  for (const auto& note : bundle.data.notes) bundle.conventions["amended:" + note] = "";
  return bundle;
}

CheckReport change_basis_check(const InstanceBundle& bundle) {
  CheckReport report;
  const BuiltBicross& bb = bundle.built;
  const auto& p = bb.hopf.algebra;
  const auto& p1 = bb.p1;
  const auto& p2 = bb.p2;
  KappaMatrices mx(p2);
  const SpinorConventions conv = mx.conv;
  const Scalar kinv = Scalar::kappa(-1);
  const std::uint64_t seed = kDefaultSeed;

  auto th = [&](int a) { return Element::generator(p, *p1->find(std::string("th") + char('1' + a))); };
  auto tb = [&](int a) { return bb.embed2(Element::generator(p2, mx.ids.tb[a])); };
  auto Ae = [&](int a, int b) { return bb.embed2(Element::generator(p2, mx.ids.A[a][b])); };
  auto z = [&](int mu) { return Element::generator(p, *p1->find("z" + std::to_string(mu))); };

  // X_mu = z_mu - i/2 th sigma_mu tb, sigma lowered
  std::array<Element, 4> X;
  for (int mu = 0; mu < 4; ++mu) {
    Element corr = Element::zero(p);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Scalar s = conv.sigma[mu][a][b] * Scalar(conv.metric[mu]);
        if (s.is_zero()) continue;
        corr += (th(a) * tb(b)).scaled(s);
      }
    X[mu] = z(mu) - corr.scaled(Scalar::i() * half());
  }

  auto comm = [](const Element& x, const Element& y) { return x * y - y * x; };
  auto anti = [](const Element& x, const Element& y) { return x * y + y * x; };
  auto embed_pattern = [&](const Mat2e& M, int a, int b) { return bb.embed2(M.m[a][b]); };
  auto theta_bilinear = [&](const Mat2e& M) {
    // sum_{a,b} th_a M[a][b] tb_b
    Element acc = Element::zero(p);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) acc += th(a) * embed_pattern(M, a, b) * tb(b);
    return acc;
  };
  auto add_check = [&](const std::string& id, const std::string& anchor, const Element& got,
                       const Element& want, const std::string& note) {
    bool ok = got == want;
    std::string detail = note;
    if (!ok) {
      detail = "difference=" + (got - want).str() + " computed=" + got.str() +
               " reference=" + want.str() + (note.empty() ? "" : " [" + note + "]");
    }
    report.add(id, anchor, ok, detail, seed);
  };

  // odd-odd sector
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      add_check("change-basis/theta-theta/" + std::to_string(a + 1) + std::to_string(b + 1),
                "supertranslation-theta-theta", anti(th(a), th(b)), Element::zero(p), "");
      Mat2e M = mat_sub(mat2_identity(p2), mx.invAAdag);
      Element want = bb.embed2(M.m[b][a]).scaled(-(Scalar::i() * half() * kinv));
      add_check("change-basis/theta-tbar/" + std::to_string(a + 1) + std::to_string(b + 1),
                "supertranslation-theta-tbar", anti(th(a), tb(b)), want,
                "lower-index transcription; sign absorbed by index lowering");
    }

  // coproduct of theta and antipode of A are carried over verbatim
  for (int a = 0; a < 2; ++a) {
    TensorElement got = coproduct(bb.hopf, th(a));
    TensorElement want = TensorElement::zero({p, p});
    Element tha = th(a);
    for (const auto& [w, c] : tha.terms()) want.add_term(WordTuple{{w, Word::unit()}}, c);
    Mat2e adjA = mat_adj(mx.A);
    for (int b = 0; b < 2; ++b) {
      Element first = bb.embed2(adjA.m[b][a]);
      Element thb = th(b);
      for (const auto& [wf, cf] : first.terms())
        for (const auto& [wt, ct] : thb.terms())
          want.add_term(WordTuple{{wf, wt}}, cf * ct);
    }
    bool ok = got == want;
    report.add("change-basis/coproduct-theta/" + std::to_string(a + 1), "coproduct-theta", ok,
               ok ? "" : "computed=" + got.str() + " reference=" + want.str(), seed);
  }
  {
    Mat2e adjA = mat_adj(mx.A);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        add_check("change-basis/antipode-A/" + std::to_string(a + 1) + std::to_string(b + 1),
                  "antipode-A", antipode(bb.hopf, Ae(a, b)), bb.embed2(adjA.m[a][b]), "");
    for (int a = 0; a < 2; ++a) {
      Element want = Element::zero(p);
      for (int b = 0; b < 2; ++b) want += (bb.embed2(mx.A.m[b][a]) * th(b)).scaled(-Scalar::one());
      add_check("change-basis/antipode-theta/" + std::to_string(a + 1), "antipode-theta",
                antipode(bb.hopf, th(a)), want,
                "index form inferred from the antipode axiom");
    }
  }

  // translation sector
  for (int j = 1; j <= 3; ++j) {
    Element got = comm(X[0], X[j]);
    Mat2e bracket = mat_comm(mat_scale(mx.sigma(j), Scalar(conv.metric[j])), mx.invAAdag);
    Element want = -X[j].scaled(Scalar::i() * kinv) +
                   theta_bilinear(bracket).scaled(Scalar::i() * Scalar::ratio(1, 8) * kinv);
    add_check("change-basis/X0-Xj/" + std::to_string(j), "translation-commutator", got, want,
              "lowered-index transcription");
  }
  for (int i1 = 1; i1 <= 3; ++i1)
    for (int j = i1 + 1; j <= 3; ++j) {
      Element got = comm(X[i1], X[j]);
      Mat2e Q = mat_sub(mat2_identity(p2), mx.invAAdag);
      Mat2e si = mat_scale(mx.sigma(i1), Scalar(conv.metric[i1]));
      Mat2e sj = mat_scale(mx.sigma(j), Scalar(conv.metric[j]));
      Element want = (theta_bilinear(matmul(si, matmul(Q, sj))) -
                      theta_bilinear(matmul(sj, matmul(Q, si))))
                         .scaled(Scalar::i() * Scalar::ratio(1, 8) * kinv);
      add_check("change-basis/Xi-Xj/" + std::to_string(i1) + std::to_string(j),
                "translation-commutator", got, want, "lowered-index transcription");
    }

  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Element got = comm(Ae(a, b), X[mu]);
        Element want = bb.embed2(
            bundle.data.action.entries[mx.ids.A[a][b]][*p1->find("z" + std::to_string(mu))]);
        add_check("change-basis/A-X/" + std::to_string(mu) + "/" + std::to_string(a + 1) +
                      std::to_string(b + 1),
                  "lorentz-translation-commutator", got, want,
                  "matches the z-sector action row");
      }

  for (int mu = 0; mu < 4; ++mu)
    for (int al = 0; al < 2; ++al) {
      Element got = anti(X[mu], th(al));
      Mat2e Q = mat_sub(mat2_identity(p2), mx.invAAdag);
      Mat2e R = mat_add(mat2_identity(p2), mx.invAAdag);
      Element want = Element::zero(p);
      if (mu >= 1) {
        Mat2e si = mat_scale(mx.sigma(mu), Scalar(conv.metric[mu]));
        Mat2e m = matmul(si, Q);
        for (int g = 0; g < 2; ++g)
          want += (th(g) * embed_pattern(m, g, al)).scaled(Scalar::ratio(1, 4) * kinv);
      } else {
        for (int g = 0; g < 2; ++g)
          want += (th(g) * embed_pattern(R, g, al)).scaled(-(Scalar::ratio(1, 4) * kinv));
      }
      add_check("change-basis/X-theta/" + std::to_string(mu) + "/" + std::to_string(al + 1),
                "translation-supertranslation", got, want, "lowered-index transcription");
    }

  // coproduct of X
  {
    Mat2e adjA = mat_adj(mx.A);
    Mat2e adjAdag = mat_adj(mx.Adag);
    for (int mu = 0; mu < 4; ++mu) {
      TensorElement got = coproduct(bb.hopf, X[mu]);
      TensorElement want = TensorElement::zero({p, p});
      auto add_pair = [&](const Element& l, const Element& r, const Scalar& c) {
        for (const auto& [wl, cl] : l.terms())
          for (const auto& [wr, cr] : r.terms()) want.add_term(WordTuple{{wl, wr}}, cl * cr * c);
      };
      add_pair(X[mu], Element::unit(p), Scalar::one());
      for (int nu = 0; nu < 4; ++nu) add_pair(bb.embed2(mx.L[mu][nu]), X[nu], Scalar::one());
      Mat2e smu = mat_scale(mx.sigma(mu), Scalar(conv.metric[mu]));
      Mat2e m1 = matmul(adjA, smu);
      for (int al = 0; al < 2; ++al) {
        Element slot1 = Element::zero(p);
        for (int bd = 0; bd < 2; ++bd) slot1 += bb.embed2(m1.m[al][bd]) * tb(bd);
        add_pair(slot1, th(al), -(Scalar::i() * half()));
      }
      Mat2e m2 = matmul(smu, adjAdag);
      for (int bd = 0; bd < 2; ++bd) {
        Element slot1 = Element::zero(p);
        for (int al = 0; al < 2; ++al) slot1 += th(al) * bb.embed2(m2.m[al][bd]);
        add_pair(slot1, tb(bd), -(Scalar::i() * half()));
      }
      bool ok = got == want;
      report.add("change-basis/coproduct-X/" + std::to_string(mu), "coproduct-X", ok,
                 ok ? "lowered-index transcription"
                    : "difference=" + (got - want).str() + " computed=" + got.str() +
                          " reference=" + want.str(),
                 seed);
    }
  }

  // antipode of X
  {
    Mat2e adjA = mat_adj(mx.A);
    Mat2e adjAb = mat_adj(mx.Ab);
    Mat2e adjAdag = mat_transpose(adjAb);
    std::array<std::array<Element, 4>, 4> Linv;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Element acc = Element::zero(p2);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c2 = 0; c2 < 2; ++c2)
              for (int dd = 0; dd < 2; ++dd) {
                Scalar coeff = conv.sigma_bar[mu][a][b] * conv.sigma[nu][c2][dd] *
                               Scalar(conv.metric[nu]);
                if (coeff.is_zero()) continue;
                acc += (adjA.m[b][c2] * adjAdag.m[dd][a]).scaled(coeff * half());
              }
        Linv[mu][nu] = acc;
      }
    for (int mu = 0; mu < 4; ++mu) {
      Element got = antipode(bb.hopf, X[mu]);
      Element want = Element::zero(p);
      for (int nu = 0; nu < 4; ++nu) {
        Scalar c = -Scalar(conv.metric[mu]) * Scalar(conv.metric[nu]);
        want += (bb.embed2(Linv[mu][nu]) * X[nu]).scaled(c);
      }
      add_check("change-basis/antipode-X/" + std::to_string(mu), "antipode-X", got, want,
                "lowered-index transcription");
    }
  }

  report.sort();
  return report;
}

}  // namespace hsa
