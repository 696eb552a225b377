#include "linext/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "linext/error.hpp"

namespace linext {

const std::string* VerificationReport::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string VerificationReport::to_text(bool include_timing) const {
  std::ostringstream out;
  for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
  out << "verdict=" << (passed ? "pass" : "fail") << '\n';
  if (include_timing) out << "elapsed_ms=" << elapsed_ms << '\n';
  return out.str();
}

namespace {

std::string pair_text(const char* a, std::uint64_t x, const char* b, std::uint64_t y) {
  return std::string(a) + "=" + std::to_string(x) + "," + b + "=" + std::to_string(y);
}

class Builder {
 public:
  void add(const std::string& key, const std::string& value) { report_.entries.emplace_back(key, value); }

  void fact(const std::string& key, bool holds, const std::string& counterexample = {}) {
    add(key, holds ? "holds" : "fails");
    if (!holds && !counterexample.empty()) add(key + ".counterexample", counterexample);
  }

  /// A check that affects the verdict.
  void check(const std::string& key, bool ok, const std::string& counterexample = {}) {
    fact(key, ok, counterexample);
    if (!ok) report_.passed = false;
  }

  void not_applicable(const std::string& key, const std::string& why) { add(key, "n/a (" + why + ")"); }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

template <typename F>
auto guarded(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

VerificationReport check_loop(const FiniteLoop& loop, IotaSearch search) {
  const auto start = std::chrono::steady_clock::now();
  Builder b;
  b.add("loop.order", std::to_string(loop.order()));
  const auto lip = find_lip_violation(loop, search);
  const auto rip = find_rip_violation(loop, search);
  b.fact("lip", !lip, lip ? pair_text("x", lip->x, "y", lip->y) : "");
  b.fact("rip", !rip, rip ? pair_text("x", rip->x, "y", rip->y) : "");
  b.fact("ip", !lip && !rip);
  const auto mismatch = find_inverse_mismatch(loop);
  b.fact("two_sided_inverses", !mismatch, mismatch ? "x=" + std::to_string(*mismatch) : "");
  if (!mismatch) {
    b.fact("order3_element", has_order3_element(loop));
    std::string inv;
    for (LoopElement x = 0; x < loop.order(); ++x) {
      if (x) inv += ' ';
      inv += std::to_string(loop.left_inverse(x));
    }
    b.add("inverse", inv);
  } else {
    b.not_applicable("order3_element", "no two-sided inverses");
  }
  b.fact("commutative", is_commutative(loop));
  b.fact("associative", is_associative(loop));
  // The two ways of finding iota must agree, and LIP or RIP forces two-sided inverses.
  const auto other = search == IotaSearch::LeftInverse ? IotaSearch::Exhaustive : IotaSearch::LeftInverse;
  b.check("consistency.iota", has_lip(loop, other) == !lip && has_rip(loop, other) == !rip);
  b.check("consistency.inverses", (lip && rip) || !mismatch);
  auto report = b.take();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_cocycle(const LoopCocycle& c, VerifyTarget target, IotaSearch search) {
  const auto start = std::chrono::steady_clock::now();
  Builder b;
  const FiniteLoop& base = c.loop();
  const ExtensionLoop ext = build_extension(c);
  const FiniteLoop& f = ext.loop();
  b.add("loop.order", std::to_string(base.order()));
  b.add("group", c.group().spec());
  b.add("extension.order", std::to_string(f.order()));

  // Brute force on F(P, Q).
  const auto lip = find_lip_violation(f, search);
  const auto rip = find_rip_violation(f, search);
  const auto mismatch = find_inverse_mismatch(f);
  b.fact("brute.lip", !lip, lip ? pair_text("x", lip->x, "y", lip->y) : "");
  b.fact("brute.rip", !rip, rip ? pair_text("x", rip->x, "y", rip->y) : "");
  b.fact("brute.ip", !lip && !rip);
  b.fact("brute.inverses", !mismatch, mismatch ? "x=" + std::to_string(*mismatch) : "");
  const bool brute_comm = is_commutative(f);
  b.fact("brute.commutative", brute_comm);
  const bool strong = is_strongly_linear(c);
  b.fact("strongly_linear", strong);

  auto pair_or_empty = [](const std::optional<PairViolation>& v) {
    return v ? pair_text("xi", v->x, "eta", v->y) : std::string{};
  };

  // Condition checkers, each compared against its brute-force counterpart.
  const bool comm = is_commutative_extension(c);
  b.fact("condition.commutative", comm);
  b.check("agree.commutative", comm == brute_comm);

  if (auto cip = guarded([&] { return find_cip_violation(c); })) {
    b.fact("condition.cip", !*cip, *cip ? "xi=" + std::to_string(**cip) : "");
    b.check("agree.cip", !*cip == !mismatch);
  } else {
    b.not_applicable("condition.cip", "loop lacks two-sided inverses");
  }
  if (auto v = guarded([&] { return find_lip_condition_violation(c); })) {
    b.fact("condition.lip", !*v, pair_or_empty(*v));
    b.check("agree.lip", !*v == !lip);
  } else {
    b.not_applicable("condition.lip", "loop lacks LIP");
  }
  if (auto v = guarded([&] { return find_rip_condition_violation(c); })) {
    b.fact("condition.rip", !*v, pair_or_empty(*v));
    b.check("agree.rip", !*v == !rip);
  } else {
    b.not_applicable("condition.rip", "loop lacks RIP");
  }
  std::optional<bool> ip_condition;
  if (auto v = guarded([&] { return find_ip_condition_violation(c); })) {
    ip_condition = !*v;
    b.fact("condition.ip", !*v, pair_or_empty(*v));
    b.check("agree.ip", !*v == (!lip && !rip));
  } else {
    b.not_applicable("condition.ip", "needs a strongly linear cocycle over an IP loop");
  }
  if (auto v = guarded([&] { return find_equivariance_violation(c); })) {
    b.fact("condition.equivariance", !*v, pair_or_empty(*v));
    b.check("agree.equivariance", ip_condition && *ip_condition == !*v);
  } else {
    b.not_applicable("condition.equivariance", "needs strongly linear, IP, no order-3 element");
  }

  // Closed-form inverses against division in F.
  std::optional<LoopElement> left_bad, right_bad;
  for (LoopElement z = 0; z < f.order() && !(left_bad && right_bad); ++z) {
    const auto e = ext.decode(z);
    if (!left_bad && ext.encode(extension_left_inverse(c, e)) != f.left_inverse(z)) left_bad = z;
    if (!right_bad && ext.encode(extension_right_inverse(c, e)) != f.right_inverse(z)) right_bad = z;
  }
  b.check("formula.left_inverse", !left_bad, left_bad ? "z=" + std::to_string(*left_bad) : "");
  b.check("formula.right_inverse", !right_bad, right_bad ? "z=" + std::to_string(*right_bad) : "");

  const auto kernel = ext.kernel();
  const bool normal = is_normal_subloop(f, kernel);
  b.check("kernel.normal", normal);
  b.check("kernel.quotient", normal && quotient_loop(f, kernel) == base);

  switch (target) {
    case VerifyTarget::Consistency: break;
    case VerifyTarget::Lip: b.check("target.lip", !lip, lip ? pair_text("x", lip->x, "y", lip->y) : ""); break;
    case VerifyTarget::Rip: b.check("target.rip", !rip, rip ? pair_text("x", rip->x, "y", rip->y) : ""); break;
    case VerifyTarget::Ip: {
      const auto& v = lip ? lip : rip;
      b.check("target.ip", !v, v ? pair_text("x", v->x, "y", v->y) : "");
      break;
    }
  }
  auto report = b.take();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace linext
