#include "t1kit/stdlib.hpp"

#include <sstream>

namespace t1kit {

namespace {

TermPtr V(const std::string& n) { return var(n); }
TermPtr B(BaseTag t, std::vector<TermPtr> a = {}) {
  return apply(base_fn(t), std::move(a));
}
TermPtr EPS() { return B(BaseTag::Eps); }
TermPtr Z0() { return B(BaseTag::Zero); }
TermPtr O1() { return B(BaseTag::One); }
TermPtr CAT(TermPtr a, TermPtr b) {
  return B(BaseTag::Cat, {std::move(a), std::move(b)});
}
TermPtr LCH(TermPtr y, TermPtr x) {  // remove |y| leftmost bits of x
  return B(BaseTag::LChop, {std::move(y), std::move(x)});
}
TermPtr RCH(TermPtr x, TermPtr y) {  // remove |y| rightmost bits of x
  return B(BaseTag::RChop, {std::move(x), std::move(y)});
}
TermPtr CND(TermPtr w, TermPtr x, TermPtr y, TermPtr z) {
  return B(BaseTag::Cond,
           {std::move(w), std::move(x), std::move(y), std::move(z)});
}
TermPtr LH(TermPtr x) { return B(BaseTag::LHalf, {std::move(x)}); }
TermPtr RH(TermPtr x) { return B(BaseTag::RHalf, {std::move(x)}); }
TermPtr AZ(TermPtr x) { return B(BaseTag::AllZero, {std::move(x)}); }
TermPtr AO(TermPtr x) { return B(BaseTag::AllOne, {std::move(x)}); }

std::vector<std::string> names(const std::string& stem, int n, int from = 1) {
  std::vector<std::string> out;
  for (int i = from; i < from + n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

FnPtr strn(const FnPtr& g, const FnPtr& h, std::string name) {
  int n = fn_arity(g) - 1;
  if (n < 0 || fn_arity(h) != n + 3) {
    throw std::invalid_argument("strn: g arity n+1, h arity n+3 required");
  }
  auto ys = names("y", n);
  // G(x, z, ys) = g(x, ys); H(x, z, ys, vl, vr) = h(x, ys, vl, vr)
  std::vector<std::string> gp = {"x", "z"};
  gp.insert(gp.end(), ys.begin(), ys.end());
  std::vector<TermPtr> gargs = {V("x")};
  for (const auto& y : ys) gargs.push_back(V(y));
  FnPtr G = lambda_fn(gp, apply(g, gargs));

  std::vector<std::string> hp = gp;
  hp.push_back("vl");
  hp.push_back("vr");
  std::vector<TermPtr> hargs = gargs;
  hargs.push_back(V("vl"));
  hargs.push_back(V("vr"));
  FnPtr H = lambda_fn(hp, apply(h, hargs));

  FnPtr id = lambda_fn({"z"}, V("z"));
  FnPtr T = trn_fn(G, H, id, id);

  std::vector<std::string> wp = {"x"};
  wp.insert(wp.end(), ys.begin(), ys.end());
  std::vector<TermPtr> wargs = {V("x"), EPS()};
  for (const auto& y : ys) wargs.push_back(V(y));
  return lambda_fn(wp, apply(T, wargs), std::move(name));
}

namespace {

FnPtr crn_multi(const DefRegistry& reg, const FnPtr& h, int m, bool left,
                std::string name) {
  int k = fn_arity(h) - m;
  if (m < 1 || k < 0) throw std::invalid_argument("crn_multi: bad arity");
  FnPtr lenmax = reg.get("lenmax");
  FnPtr pad = reg.get(left ? "lp0" : "rp0");
  FnPtr align = reg.get(left ? "rc" : "lc");

  auto xs = names("x", m);
  auto ys = names("y", k);
  // inner(z, p1..pm, ys) = h(align(p1, z), ..., align(pm, z), ys)
  std::vector<std::string> ip = {"z"};
  auto ps = names("p", m);
  ip.insert(ip.end(), ps.begin(), ps.end());
  ip.insert(ip.end(), ys.begin(), ys.end());
  std::vector<TermPtr> hargs;
  for (const auto& p : ps) hargs.push_back(apply(align, {V(p), V("z")}));
  for (const auto& y : ys) hargs.push_back(V(y));
  FnPtr inner = lambda_fn(ip, apply(h, hargs));
  FnPtr crn = left ? lcrn_fn(inner) : rcrn_fn(inner);

  TermPtr mx = V(xs[0]);
  for (int i = 1; i < m; ++i) mx = apply(lenmax, {V(xs[static_cast<std::size_t>(i)]), mx});
  std::vector<TermPtr> cargs = {mx};
  for (const auto& x : xs) cargs.push_back(apply(pad, {V(x), mx}));
  for (const auto& y : ys) cargs.push_back(V(y));

  std::vector<std::string> wp = xs;
  wp.insert(wp.end(), ys.begin(), ys.end());
  return lambda_fn(wp, apply(crn, cargs), std::move(name));
}

}  // namespace

FnPtr lcrn_multi(const DefRegistry& reg, const FnPtr& h, int m,
                 std::string name) {
  return crn_multi(reg, h, m, true, std::move(name));
}
FnPtr rcrn_multi(const DefRegistry& reg, const FnPtr& h, int m,
                 std::string name) {
  return crn_multi(reg, h, m, false, std::move(name));
}

namespace {

DefRegistry build_stdlib() {
  DefRegistry R;
  auto def = [&R](const std::string& name, FnPtr f) {
    if (auto v = wf_check(f)) {
      throw std::logic_error("stdlib '" + name + "': " + *v);
    }
    R.add(name, std::move(f));
  };
  auto F = [&R](const std::string& name) { return R.get(name); };
  auto A = [&R](const std::string& name, std::vector<TermPtr> args) {
    return apply(R.get(name), std::move(args));
  };
  auto lam = [](std::vector<std::string> ps, TermPtr body) {
    return lambda_fn(std::move(ps), std::move(body));
  };

  // --- single-bit selectors and boolean connectives -------------------------
  def("rbit", lam({"x"}, CND(V("x"), EPS(), Z0(), O1())));
  def("rdel", lam({"x"}, RCH(V("x"), O1())));
  def("ldel", lam({"x"}, LCH(O1(), V("x"))));
  def("lbit", lam({"x"}, RCH(V("x"), A("ldel", {V("x")}))));
  def("czl", lam({"x", "y", "z"}, CND(V("x"), V("y"), V("z"), V("z"))));
  def("cel", lam({"x", "y", "z"},
                 A("czl", {LCH(LH(V("x")), RH(V("x"))), V("y"), V("z")})));
  def("cb", lam({"x", "y", "z"}, CND(V("x"), V("z"), V("z"), V("y"))));
  def("idb", lam({"x"}, A("cb", {V("x"), O1(), Z0()})));
  def("notb", lam({"x"}, A("cb", {V("x"), Z0(), O1()})));
  def("andb", lam({"x", "y"}, A("cb", {V("x"), A("idb", {V("y")}), Z0()})));
  def("orb", lam({"x", "y"}, A("cb", {V("x"), O1(), A("idb", {V("y")})})));
  def("impb", lam({"x", "y"}, A("cb", {V("x"), A("idb", {V("y")}), O1()})));
  def("iffb", lam({"x", "y"},
                  A("cb", {V("x"), A("idb", {V("y")}), A("notb", {V("y")})})));
  def("xorb", lam({"x", "y"},
                  A("cb", {V("x"), A("notb", {V("y")}), A("idb", {V("y")})})));

  // --- positional bits, copies, length comparison ---------------------------
  def("lb", lam({"x", "y"},
                A("czl", {V("y"), EPS(),
                          A("lbit", {LCH(A("ldel", {V("y")}), V("x"))})})));
  def("rb", lam({"x", "y"},
                A("czl", {V("y"), EPS(),
                          A("rbit", {RCH(V("x"), A("rdel", {V("y")}))})})));
  def("bitlb",
      lam({"x", "y"}, CND(A("lb", {V("x"), V("y")}), Z0(), Z0(), O1())));
  def("bitrb",
      lam({"x", "y"}, CND(A("rb", {V("x"), V("y")}), Z0(), Z0(), O1())));
  def("lc", lam({"x", "y"}, RCH(V("x"), LCH(V("y"), V("x")))));
  def("rc", lam({"x", "y"}, LCH(RCH(V("x"), V("y")), V("x"))));
  def("lenmin", lam({"x", "y"}, A("czl", {RCH(V("x"), V("y")), V("x"), V("y")})));
  def("lenmax", lam({"x", "y"}, A("czl", {LCH(V("x"), V("y")), V("x"), V("y")})));
  def("lenmax3", lam({"x1", "x2", "x3"},
                     A("lenmax", {V("x1"), A("lenmax", {V("x2"), V("x3")})})));
  def("lenmax4",
      lam({"x1", "x2", "x3", "x4"},
          A("lenmax", {V("x1"), A("lenmax3", {V("x2"), V("x3"), V("x4")})})));
  def("lp0", lam({"x", "y"}, CAT(AZ(RCH(V("y"), V("x"))), V("x"))));
  def("lp1", lam({"x", "y"}, CAT(AO(RCH(V("y"), V("x"))), V("x"))));
  def("rp0", lam({"x", "y"}, CAT(V("x"), AZ(LCH(V("x"), V("y"))))));
  def("rp1", lam({"x", "y"}, CAT(V("x"), AO(LCH(V("x"), V("y"))))));
  def("la0", lam({"x", "y"}, CAT(AZ(RCH(V("y"), V("x"))),
                                 LCH(RCH(V("x"), V("y")), V("x")))));
  def("ra0", lam({"x", "y"}, CAT(RCH(V("x"), LCH(V("y"), V("x"))),
                                 AZ(LCH(V("x"), V("y"))))));

  // --- fold-AND / fold-OR over all bits -------------------------------------
  def("AND", strn(lam({"x"}, V("x")),
                  lam({"x", "vl", "vr"}, A("andb", {V("vl"), V("vr")}))));
  def("OR", strn(lam({"x"}, V("x")),
                 lam({"x", "vl", "vr"}, A("orb", {V("vl"), V("vr")}))));

  // --- bitwise maps ---------------------------------------------------------
  def("not", lcrn_fn(lam({"x"}, A("notb", {A("lbit", {V("x")})}))));
  def("and2", lcrn_multi(R, lam({"a", "b"},
                                A("andb", {A("lbit", {V("a")}),
                                           A("lbit", {V("b")})})), 2));
  def("or2", lcrn_multi(R, lam({"a", "b"},
                               A("orb", {A("lbit", {V("a")}),
                                         A("lbit", {V("b")})})), 2));
  def("xor2", lcrn_multi(R, lam({"a", "b"},
                                A("xorb", {A("lbit", {V("a")}),
                                           A("lbit", {V("b")})})), 2));
  def("xor3",
      lcrn_multi(R, lam({"a", "b", "c"},
                        A("xorb", {A("xorb", {A("lbit", {V("a")}),
                                              A("lbit", {V("b")})}),
                                   A("lbit", {V("c")})})), 3));
  def("iff2", lcrn_multi(R, lam({"a", "b"},
                                A("iffb", {A("lbit", {V("a")}),
                                           A("lbit", {V("b")})})), 2));

  // --- reversal -------------------------------------------------------------
  def("reverse",
      rcrn_fn(lam({"y", "x"}, A("rbit", {RCH(V("x"), A("rdel", {V("y")}))}))));
  def("rev", lam({"x"}, A("reverse", {V("x"), V("x")})));

  // --- powers of two on lengths ---------------------------------------------
  def("dbl", lam({"y"}, CAT(V("y"), V("y"))));
  def("div2", lam({"x"}, AO(LH(V("x")))));
  def("div4", lam({"x"}, A("div2", {LH(V("x"))})));
  def("div8", lam({"x"}, A("div4", {LH(V("x"))})));
  def("mod2", lam({"x"}, LCH(A("dbl", {A("div2", {V("x")})}), AO(V("x")))));
  def("mod4", lam({"x"}, LCH(A("dbl", {A("dbl", {A("div4", {V("x")})})}),
                             AO(V("x")))));
  def("mod8",
      lam({"x"}, LCH(A("dbl", {A("dbl", {A("dbl", {A("div8", {V("x")})})})}),
                     AO(V("x")))));
  def("pow", strn(lam({"x"}, AO(V("x"))),
                  lam({"x", "vl", "vr"}, CAT(V("vr"), V("vr")))));
  def("ispow", strn(lam({"x"}, EPS()),
                    lam({"x", "vl", "vr"}, A("cel", {V("x"), V("vr"), O1()}))));
  def("smash",
      strn(lam({"x", "y"}, A("czl", {V("x"), EPS(), V("y")})),
           lam({"x", "y", "vl", "vr"}, CAT(V("vl"), V("vr")))));
  {
    FnPtr g = lam({"y", "x"}, A("czl", {V("y"), EPS(), AO(V("x"))}));
    FnPtr h = lam({"y", "x", "vl", "vr"}, V("vr"));
    FnPtr t = trn_fn(g, h, base_fn(BaseTag::LHalf), base_fn(BaseTag::LHalf));
    def("powdiv", lam({"x", "y"}, apply(t, {V("y"), V("x")})));
  }
  def("powmod",
      lam({"x", "y"}, LCH(A("smash", {A("pow", {V("y")}),
                                      A("powdiv", {V("x"), V("y")})}),
                          AO(V("x")))));

  // --- first/masked bits ----------------------------------------------------
  def("first0",
      rcrn_fn(lam({"x"}, A("cb", {A("AND", {CAT(O1(), A("rdel", {V("x")}))}),
                                  A("notb", {A("rbit", {V("x")})}), Z0()}))));
  def("first1", rcrn_fn(lam({"x"}, A("cb", {A("OR", {A("rdel", {V("x")})}),
                                            Z0(), A("rbit", {V("x")})}))));
  def("maskbit", lam({"x", "y"}, A("OR", {A("and2", {V("x"), V("y")})})));
  def("delfirst1",
      lam({"x"}, A("and2", {V("x"), A("not", {A("first1", {V("x")})})})));

  // --- numeric comparison, successor, predecessor ---------------------------
  def("eqn", lam({"x", "y"},
                 A("AND", {CAT(O1(), A("iff2", {V("x"), V("y")}))})));
  {
    FnPtr h = lam({"a", "b"},
                  A("andb", {A("andb", {A("notb", {A("rbit", {V("a")})}),
                                        A("rbit", {V("b")})}),
                             A("eqn", {A("rdel", {V("a")}),
                                       A("rdel", {V("b")})})}));
    FnPtr inner = rcrn_multi(R, h, 2);
    def("ltn", lam({"x", "y"},
                   A("OR", {apply(inner, {A("lp0", {V("x"), V("y")}),
                                          A("lp0", {V("y"), V("x")})})})));
  }
  def("cuss",
      lcrn_fn(lam({"x"}, A("cb", {A("AND", {CAT(O1(), A("ldel", {V("x")}))}),
                                  A("notb", {A("lbit", {V("x")})}),
                                  A("lbit", {V("x")})}))));
  def("succ", lam({"x"}, A("cuss", {CAT(Z0(), V("x"))})));
  def("auxpred",
      lcrn_fn(lam({"x"}, A("cb", {A("OR", {A("ldel", {V("x")})}),
                                  A("lbit", {V("x")}),
                                  A("notb", {A("lbit", {V("x")})})}))));
  def("pred", lam({"x"}, A("cb", {A("OR", {V("x")}),
                                  A("auxpred", {V("x")}), V("x")})));

  // --- binary length --------------------------------------------------------
  def("len", strn(lam({"x"}, AO(V("x"))),
                  lam({"x", "vl", "vr"},
                      A("cel", {V("x"), CAT(V("vl"), Z0()),
                                CAT(V("vl"), O1())}))));

  // --- addition and carry-save counting -------------------------------------
  def("carry",
      lcrn_multi(R, lam({"a", "b"},
                        A("maskbit", {A("and2", {V("a"), V("b")}),
                                      A("first0",
                                        {A("xor2", {V("a"), V("b")})})})), 2));
  def("addn", lam({"x", "y"},
                  A("xor3", {CAT(A("carry", {V("x"), V("y")}), Z0()),
                             V("x"), V("y")})));
  def("cscar3",
      lcrn_multi(R, lam({"a", "b", "c"},
                        A("orb", {A("orb", {A("andb", {A("lbit", {V("a")}),
                                                       A("lbit", {V("b")})}),
                                            A("andb", {A("lbit", {V("b")}),
                                                       A("lbit", {V("c")})})}),
                                  A("andb", {A("lbit", {V("c")}),
                                             A("lbit", {V("a")})})})), 3));
  def("csadd3", lam({"x1", "x2", "x3"},
                    A("xor3", {CAT(Z0(), V("x1")), CAT(Z0(), V("x2")),
                               CAT(Z0(), V("x3"))})));
  def("cscar",
      lam({"x1", "x2", "x3", "x4"},
          CAT(A("cscar3",
                {CAT(A("cscar3", {V("x1"), V("x2"), V("x3")}), Z0()),
                 A("csadd3", {V("x1"), V("x2"), V("x3")}), CAT(Z0(), V("x4"))}),
              Z0())));
  def("csadd",
      lam({"x1", "x2", "x3", "x4"},
          A("csadd3",
            {CAT(A("cscar3", {V("x1"), V("x2"), V("x3")}), Z0()),
             A("csadd3", {V("x1"), V("x2"), V("x3")}), CAT(Z0(), V("x4"))})));
  def("caradd",
      strn(lam({"x"}, CAT(AZ(V("x")), V("x"))),
           lam({"x", "vl", "vr"},
               CAT(A("cscar", {LH(V("vl")), RH(V("vl")), LH(V("vr")),
                               RH(V("vr"))}),
                   A("csadd", {LH(V("vl")), RH(V("vl")), LH(V("vr")),
                               RH(V("vr"))})))));
  def("car", lam({"x"}, LH(A("caradd", {V("x")}))));
  def("add", lam({"x"}, RH(A("caradd", {V("x")}))));
  def("sum", lam({"x"}, A("addn", {A("car", {V("x")}), A("add", {V("x")})})));

  // --- indexed bit via binary position --------------------------------------
  def("powmask", lcrn_fn(lam({"x", "z"},
                             A("eqn", {A("len", {V("x")}), V("z")}))));
  def("bit", lam({"x", "z"},
                 A("maskbit", {V("x"), A("powmask", {V("x"), V("z")})})));

  // --- tupling (round-trips only for power-of-two widths) -------------------
  def("tuple2", lam({"x1", "x2", "z"},
                    CAT(A("lp0", {V("x1"), V("z")}),
                        A("lp0", {V("x2"), V("z")}))));
  def("tuple4",
      lam({"x1", "x2", "x3", "x4", "z"},
          CAT(A("tuple2", {V("x1"), V("x2"), V("z")}),
              A("tuple2", {V("x3"), V("x4"), V("z")}))));
  def("mktuple2", lam({"x1", "x2"},
                      A("tuple2", {V("x1"), V("x2"),
                                   A("lenmax", {V("x1"), V("x2")})})));
  def("mktuple4",
      lam({"x1", "x2", "x3", "x4"},
          A("tuple4", {V("x1"), V("x2"), V("x3"), V("x4"),
                       A("lenmax4", {V("x1"), V("x2"), V("x3"), V("x4")})})));
  def("pi2_1", lam({"y"}, LH(V("y"))));
  def("pi2_2", lam({"y"}, RH(V("y"))));
  def("pi4_1", lam({"y"}, LH(LH(V("y")))));
  def("pi4_2", lam({"y"}, RH(LH(V("y")))));
  def("pi4_3", lam({"y"}, LH(RH(V("y")))));
  def("pi4_4", lam({"y"}, RH(RH(V("y")))));

  // --- pigeonhole-principle family ------------------------------------------
  // The adjacency matrix a has n rows (holes) by n+1 columns (pigeons), in
  // row-major order; n is given in unary.
  auto area = [&] {  // (n+1)*n reference string: (n1 # n)
    return A("smash", {CAT(V("n"), O1()), V("n")});
  };
  def("adj", lam({"a", "n"},
                 CAT(RCH(V("a"), LCH(area(), V("a"))),
                     AZ(LCH(V("a"), area())))));
  def("entry",
      lam({"a", "n", "k", "l"},
          A("rbit", {LCH(CAT(A("smash", {CAT(V("n"), O1()),
                                         A("rdel", {V("l")})}),
                             A("rdel", {V("k")})),
                         A("adj", {V("a"), V("n")}))})));
  {
    FnPtr h = lam({"l", "a", "n", "k"},
                  A("entry", {V("a"), V("n"), V("k"), V("l")}));
    FnPtr inner = rcrn_fn(h);
    def("loc", lam({"a", "n", "k", "l"},
                   apply(inner, {V("l"), V("a"), V("n"), V("k")})));
  }
  def("col", lam({"a", "n", "k"}, A("loc", {V("a"), V("n"), V("k"), V("n")})));
  {
    FnPtr h = lam({"k", "a", "n", "l"},
                  A("entry", {V("a"), V("n"), V("k"), V("l")}));
    FnPtr inner = rcrn_fn(h);
    def("wor", lam({"a", "n", "k", "l"},
                   apply(inner, {V("k"), V("a"), V("n"), V("l")})));
  }
  def("row", lam({"a", "n", "l"},
                 A("wor", {V("a"), V("n"), CAT(V("n"), O1()), V("l")})));
  {
    FnPtr h = lam({"x", "a", "n"}, A("OR", {A("col", {V("a"), V("n"), V("x")})}));
    FnPtr inner = rcrn_fn(h);
    def("pam", lam({"a", "n", "x"}, apply(inner, {V("x"), V("a"), V("n")})));
  }
  def("map", lam({"a", "n"},
                 A("AND", {A("pam", {V("a"), V("n"), CAT(V("n"), O1())})})));
  {
    FnPtr h = lam({"x", "a", "n"},
                  A("notb", {A("OR", {A("delfirst1",
                                        {A("row", {V("a"), V("n"), V("x")})})})}));
    FnPtr inner = rcrn_fn(h);
    def("jni", lam({"a", "n", "x"}, apply(inner, {V("x"), V("a"), V("n")})));
  }
  def("inj", lam({"a", "n"}, A("AND", {A("jni", {V("a"), V("n"), V("n")})})));
  {
    FnPtr h = lam({"l", "a", "n", "k"},
                  A("OR", {A("wor", {V("a"), V("n"), V("k"), V("l")})}));
    FnPtr inner = rcrn_fn(h);
    def("tnuoc", lam({"a", "n", "k", "l"},
                     apply(inner, {V("l"), V("a"), V("n"), V("k")})));
  }
  def("count", lam({"a", "n", "k", "l"},
                   A("sum", {A("tnuoc", {V("a"), V("n"), V("k"), V("l")})})));
  {
    FnPtr h = lam({"k", "a", "n", "m"},
                  A("maskbit", {A("col", {V("a"), V("n"), V("k")}), V("m")}));
    FnPtr inner = rcrn_fn(h);
    def("mwor", lam({"a", "n", "k", "m"},
                    apply(inner, {V("k"), V("a"), V("n"), V("m")})));
  }
  def("mrow", lam({"a", "n", "m"},
                  A("mwor", {V("a"), V("n"), CAT(V("n"), O1()), V("m")})));
  def("pos", lam({"a", "n", "k"},
                 A("first1", {A("col", {V("a"), V("n"), V("k")})})));
  def("php", lam({"a", "n"},
                 A("impb", {A("map", {V("a"), V("n")}),
                            A("notb", {A("inj", {V("a"), V("n")})})})));

  (void)F;
  return R;
}

}  // namespace

const DefRegistry& stdlib_registry() {
  static const DefRegistry R = build_stdlib();
  return R;
}

std::string dump_stdlib_defs() {
  const DefRegistry& R = stdlib_registry();
  std::ostringstream os;
  for (const auto& name : R.order) {
    FnPtr f = R.get(name);
    auto anon = std::make_shared<FunctionSymbol>(*f);
    anon->name.clear();
    os << "def " << name << " = " << print_fn(anon) << "\n";
  }
  return os.str();
}

}  // namespace t1kit
