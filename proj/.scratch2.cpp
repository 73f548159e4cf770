#include <chrono>
#include <iostream>
#include "t1kit/evaluator.hpp"
#include "t1kit/stdlib.hpp"
using namespace t1kit;
int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::cout << "php n=3: " << (php_exhaustive(stdlib_registry(), 3) ? "ok" : "FAIL");
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << " (" << dt << " ms)\n";
  // defs dump round-trip
  std::string dump = dump_stdlib_defs();
  NameEnv env;
  parse_defs(dump, env);
  Evaluator ev;
  Env e{{"x", "10110"}};
  auto a = ev.eval_fn(env.at("succ"), {"10110"});
  auto b = ev.eval_fn(stdlib_registry().get("succ"), {"10110"});
  std::cout << "round-trip succ: " << a << " vs " << b << (a==b?" ok":" FAIL") << "\n";
  auto c = ev.eval_fn(env.at("php"), {"101010", "11"});
  std::cout << "round-trip php: " << c << "\n";
  std::cout << "dump size " << dump.size() << " bytes, " << env.size() << " defs\n";
  return 0;
}
