#include <cassert>
#include <iostream>

#include "t1kit/evaluator.hpp"
#include "t1kit/lengths.hpp"
#include "t1kit/stdlib.hpp"

using namespace t1kit;

int main() {
  const DefRegistry& R = stdlib_registry();
  Evaluator ev;
  auto run = [&](const char* n, std::vector<Bits> a) {
    return ev.eval_fn(R.get(n), a);
  };
  std::cout << "succ(10) = " << run("succ", {"10"}) << "\n";      // 011
  std::cout << "rev(001) = " << run("rev", {"001"}) << "\n";      // 100
  std::cout << "AND(1101) = " << run("AND", {"1101"}) << "\n";    // 0
  std::cout << "sum(1011) = " << run("sum", {"1011"}) << " int="
            << oracle::int_of(run("sum", {"1011"})) << "\n";      // 3
  std::cout << "pow(101) = " << run("pow", {"101"}) << "\n";      // 1111
  std::cout << "pred(10) = " << run("pred", {"10"}) << "\n";      // 01
  std::cout << "len(10110)= " << run("len", {"10110"}) << "\n";   // 101
  std::cout << "addn(11,01) = " << run("addn", {"11", "01"}) << "\n"; // 100
  std::cout << "ltn(01,10) = " << run("ltn", {"01", "10"}) << "\n";   // 1
  std::cout << "eqn(1,01) = " << run("eqn", {"1", "01"}) << "\n";     // 1
  std::cout << "powdiv(10110,11) = " << run("powdiv", {"10110", "11"})
            << "\n";  // floor(5/4)=1 -> length 1
  std::cout << "php n=1: " << (php_exhaustive(R, 1) ? "ok" : "FAIL") << "\n";
  std::cout << "php n=2: " << (php_exhaustive(R, 2) ? "ok" : "FAIL") << "\n";

  // length determinism smoke
  LengthCalc lc;
  for (const char* n : {"succ", "sum", "rev", "pow", "len", "php", "carry"}) {
    FnPtr f = R.get(n);
    int ar = fn_arity(f);
    std::vector<Bits> args(static_cast<size_t>(ar));
    std::vector<std::size_t> lens(static_cast<size_t>(ar));
    for (int i = 0; i < ar; ++i) { args[(size_t)i] = "101"; lens[(size_t)i] = 3; }
    if (std::string(n) == "php") { args = {"101010", "11"}; lens = {6, 2}; }
    auto v = ev.eval_fn(f, args);
    auto l = lc.fn_len(f, lens);
    std::cout << n << ": |eval|=" << v.size() << " tlen=" << l
              << (v.size() == l ? " ok" : " MISMATCH") << "\n";
  }
  // wf-check everything
  for (const auto& name : R.order) {
    if (auto v = wf_check(R.get(name))) {
      std::cout << "WF FAIL " << name << ": " << *v << "\n";
      return 1;
    }
  }
  std::cout << "all " << R.order.size() << " defs wf\n";
  return 0;
}
