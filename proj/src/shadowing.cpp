#include "limitsets/shadowing.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "limitsets/error.hpp"
#include "limitsets/io.hpp"

namespace limitsets {

Word decisive_window(const Point& p, std::int64_t shift, std::size_t j, MetricSide side) {
  if (side == MetricSide::one_sided) return window_at(p, shift, j + 1);
  return window_at(p, shift - static_cast<std::int64_t>(j), 2 * j + 1);
}

bool within(const Point& p, std::int64_t a, const Point& q, std::int64_t b, std::size_t j,
            MetricSide side) {
  return decisive_window(p, a, j, side) == decisive_window(q, b, j, side);
}

std::optional<std::size_t> agreement_depth(const Point& p, std::int64_t a, const Point& q,
                                           std::int64_t b, std::size_t cap, MetricSide side) {
  // Agreement at j implies agreement at every smaller j, so compare the
  // widest window once and count.
  Word u = decisive_window(p, a, cap, side);
  Word v = decisive_window(q, b, cap, side);
  std::optional<std::size_t> depth;
  for (std::size_t j = 0; j <= cap; ++j) {
    bool agree;
    if (side == MetricSide::one_sided) {
      agree = u[j] == v[j];
    } else {
      agree = u[cap - j] == v[cap - j] && u[cap + j] == v[cap + j];
    }
    if (!agree) break;
    depth = j;
  }
  return depth;
}

MetricSide PseudoOrbitSym::metric() const {
  if (entries.empty()) fail(Error::Kind::precondition, "pseudo-orbit has no entries");
  bool two = is_two_sided(entries.front());
  for (const Point& p : entries) {
    if (is_two_sided(p) != two) {
      fail(Error::Kind::precondition, "pseudo-orbit mixes one- and two-sided points");
    }
    if (!two && std::get<ScheduledPoint>(p).side() != Side::right) {
      fail(Error::Kind::precondition, "pseudo-orbit entries must be right-side points");
    }
  }
  return two ? MetricSide::two_sided : MetricSide::one_sided;
}

PseudoOrbitCheck verify_pseudo_orbit(const PseudoOrbitSym& po) {
  MetricSide side = po.metric();
  for (std::int64_t i = po.first_index; i < po.last_index(); ++i) {
    if (!within(po.at(i), 1, po.at(i + 1), 0, po.delta_exponent, side)) return {false, i};
  }
  return {};
}

namespace {

std::pair<Word, Word> complete_right(const SubshiftSFT& sft, const Word& word) {
  const std::size_t V = sft.vertex_length();
  Word out = word;
  std::map<Word, std::size_t> seen;
  while (true) {
    Word ctx(out.end() - static_cast<std::ptrdiff_t>(V), out.end());
    auto it = seen.find(ctx);
    if (it != seen.end()) {
      return {Word(out.begin() + static_cast<std::ptrdiff_t>(word.size()),
                   out.begin() + static_cast<std::ptrdiff_t>(it->second)),
              Word(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end())};
    }
    seen.emplace(std::move(ctx), out.size());
    auto s = sft.least_forward_symbol(out);
    if (!s) fail(Error::Kind::precondition, "pseudo-orbit leaves the SFT (no forward extension)");
    out.push_back(*s);
  }
}

// Outward symbols T, P with the leftward continuation of `word` equal to
// T followed by P repeated.
std::pair<Word, Word> complete_left(const SubshiftSFT& sft, const Word& word) {
  const std::size_t V = sft.vertex_length();
  Word reading = word;
  Word outward;
  std::map<Word, std::size_t> seen;
  while (true) {
    Word ctx(reading.begin(), reading.begin() + static_cast<std::ptrdiff_t>(V));
    auto it = seen.find(ctx);
    if (it != seen.end()) {
      return {Word(outward.begin(), outward.begin() + static_cast<std::ptrdiff_t>(it->second)),
              Word(outward.begin() + static_cast<std::ptrdiff_t>(it->second), outward.end())};
    }
    seen.emplace(std::move(ctx), outward.size());
    auto s = sft.least_backward_symbol(reading);
    if (!s) fail(Error::Kind::precondition, "pseudo-orbit leaves the SFT (no backward extension)");
    outward.push_back(*s);
    reading.insert(reading.begin(), *s);
  }
}

std::int64_t signed_size(const Word& w) { return static_cast<std::int64_t>(w.size()); }

Word slice(const Word& w, std::int64_t from, std::int64_t to) {
  return Word(w.begin() + from, w.begin() + to);
}

ShadowCertificate shadow_impl(const SubshiftSFT& sft, const PseudoOrbitSym& po, std::size_t k,
                              Direction expected) {
  if (po.direction != expected) fail(Error::Kind::precondition, "pseudo-orbit has the wrong direction");
  MetricSide side = po.metric();
  const std::int64_t a = po.first_index;
  const std::int64_t b = po.last_index();
  switch (expected) {
    case Direction::forward:
      if (a != 0) fail(Error::Kind::precondition, "forward pseudo-orbits start at index 0");
      break;
    case Direction::backward:
      if (b != 0) fail(Error::Kind::precondition, "backward pseudo-orbits end at index 0");
      break;
    case Direction::two_sided:
      if (a > 0 || b < 0) fail(Error::Kind::precondition, "two-sided pseudo-orbits contain index 0");
      break;
  }
  if (po.delta_exponent < k + sft.memory()) {
    fail(Error::Kind::delta_too_large,
         "delta 2^-" + std::to_string(po.delta_exponent) + " exceeds 2^-" +
             std::to_string(k + sft.memory()) + " required for epsilon 2^-" + std::to_string(k));
  }
  PseudoOrbitCheck check = verify_pseudo_orbit(po);
  if (!check.ok) {
    fail(Error::Kind::precondition,
         "not a delta-pseudo-orbit: jump at index " + std::to_string(*check.first_failure));
  }

  const auto R = static_cast<std::int64_t>(std::max(k, sft.vertex_length()) + 1);
  const std::int64_t lo = side == MetricSide::two_sided ? a - R : a;
  const std::int64_t hi = b + 1 + R;
  // covered[t] is shadow coordinate lo + t.
  Word covered;
  if (side == MetricSide::two_sided) covered = window_at(po.at(a), -R, static_cast<std::size_t>(R));
  for (std::int64_t i = a; i <= b; ++i) covered.push_back(window_at(po.at(i), 0, 1).front());
  Word tail = window_at(po.at(b), 1, static_cast<std::size_t>(R));
  covered.insert(covered.end(), tail.begin(), tail.end());
  if (!sft.admissible(covered)) {
    fail(Error::Kind::precondition, "pseudo-orbit entries are not points of the SFT");
  }

  ShadowCertificate cert;
  cert.epsilon_exponent = k;
  cert.first_index = a;
  auto [ext, period] = complete_right(sft, covered);
  const std::int64_t right_end = hi + signed_size(ext) + 2 * signed_size(period) + 1;
  if (expected == Direction::forward && side == MetricSide::one_sided) {
    Word transient = covered;
    transient.insert(transient.end(), ext.begin(), ext.end());
    cert.shadow = ScheduledPoint::periodic(period, std::move(transient));
    cert.checked_from = 0;
  } else {
    auto [pre, left_period] = complete_left(sft, covered);
    const std::int64_t origin = -lo;  // position of index 0 in covered
    Word left_transient = reversed(pre);
    Word before_origin = slice(covered, 0, origin);
    left_transient.insert(left_transient.end(), before_origin.begin(), before_origin.end());
    Word right_transient = slice(covered, origin, signed_size(covered));
    right_transient.insert(right_transient.end(), ext.begin(), ext.end());
    cert.shadow = TwoSidedPoint(ScheduledPoint::periodic(reversed(left_period),
                                                         std::move(left_transient), Side::left),
                                {}, ScheduledPoint::periodic(period, std::move(right_transient)));
    cert.checked_from = lo - signed_size(pre) - 2 * signed_size(left_period) - 1;
  }
  cert.checked_to = right_end;

  const std::size_t cap = std::max(k, po.delta_exponent);
  for (std::int64_t i = a; i <= b; ++i) {
    auto depth = agreement_depth(cert.shadow, i, po.at(i), 0, cap, side);
    if (!depth || *depth < k) {
      fail(Error::Kind::inconsistency, "diagonal shadow misses entry " + std::to_string(i));
    }
    cert.depths.push_back(*depth);
  }
  if (!sft.admissible(window_at(cert.shadow, cert.checked_from,
                                static_cast<std::size_t>(cert.checked_to - cert.checked_from)))) {
    fail(Error::Kind::inconsistency, "completed shadow is not admissible");
  }
  return cert;
}

std::set<Word> sampled_windows(const BackwardTail& tail, std::int64_t from, std::int64_t to,
                               std::size_t len) {
  std::set<Word> out;
  for (std::int64_t j = from; j <= to; ++j) out.insert(tail(j, len));
  return out;
}

}  // namespace

ShadowCertificate shadow_forward(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                 std::size_t epsilon_exponent) {
  return shadow_impl(sft, po, epsilon_exponent, Direction::forward);
}

ShadowCertificate shadow_backward(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                  std::size_t epsilon_exponent) {
  return shadow_impl(sft, po, epsilon_exponent, Direction::backward);
}

ShadowCertificate shadow_two_sided(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                   std::size_t epsilon_exponent) {
  return shadow_impl(sft, po, epsilon_exponent, Direction::two_sided);
}

bool recheck_certificate(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                         const ShadowCertificate& cert, std::size_t epsilon_exponent) {
  if (cert.checked_to <= cert.checked_from) return false;
  Word span = window_at(cert.shadow, cert.checked_from,
                        static_cast<std::size_t>(cert.checked_to - cert.checked_from));
  if (!sft.admissible(span)) return false;
  MetricSide side = po.metric();
  for (std::int64_t i = po.first_index; i <= po.last_index(); ++i) {
    if (!within(cert.shadow, i, po.at(i), 0, epsilon_exponent, side)) return false;
  }
  return true;
}

std::string certificate_json(const ShadowCertificate& cert, const Alphabet& alphabet) {
  nlohmann::json j;
  j["epsilon_exponent"] = cert.epsilon_exponent;
  j["first_index"] = cert.first_index;
  j["depths"] = cert.depths;
  j["checked"] = {cert.checked_from, cert.checked_to};
  j["shadow"] = point_to_json(cert.shadow, alphabet);
  return j.dump();
}

BackwardTail trajectory_tail(const Point& z) {
  return [z](std::int64_t j, std::size_t len) { return window_at(z, j, len); };
}

BackwardTail pseudo_orbit_tail(const PseudoOrbitSym& po, BackwardTail before) {
  return [po, before = std::move(before)](std::int64_t j, std::size_t len) {
    if (j > po.last_index()) fail(Error::Kind::out_of_side, "index beyond the pseudo-orbit");
    if (j >= po.first_index) return window_at(po.at(j), 0, len);
    return before(j, len);
  };
}

bool verify_backward_asymptotic(const BackwardTail& tail, std::int64_t horizon,
                                const std::function<std::size_t(std::int64_t)>& delta) {
  for (std::int64_t j = -horizon; j <= -1; ++j) {
    std::size_t d = delta(j);
    if (j > -horizon && d > delta(j - 1)) return false;
    Word from = tail(j, d + 2);
    if (Word(from.begin() + 1, from.end()) != tail(j + 1, d + 1)) return false;
  }
  return true;
}

std::optional<std::int64_t> check_cofinal_orbital_witness(const BackwardTail& po,
                                                          const BackwardTail& traj,
                                                          std::size_t epsilon_exponent,
                                                          std::int64_t K, std::int64_t horizon,
                                                          std::size_t k_res) {
  if (k_res < epsilon_exponent) fail(Error::Kind::precondition, "k_res must be at least e");
  for (std::int64_t N = std::max<std::int64_t>(K, 0); N <= horizon; ++N) {
    if (sampled_windows(po, -(N + horizon), -N, k_res + 1) ==
        sampled_windows(traj, -(N + horizon), -N, k_res + 1)) {
      return N;
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> check_eventual_strong_orbital_witness(const BackwardTail& po,
                                                                  const BackwardTail& traj,
                                                                  std::size_t epsilon_exponent,
                                                                  std::int64_t horizon,
                                                                  std::size_t k_res) {
  if (k_res < epsilon_exponent) fail(Error::Kind::precondition, "k_res must be at least e");
  std::optional<std::int64_t> K;
  for (std::int64_t N = horizon; N >= 0; --N) {
    if (sampled_windows(po, -(N + horizon), -N, k_res + 1) !=
        sampled_windows(traj, -(N + horizon), -N, k_res + 1)) {
      break;
    }
    K = N;
  }
  return K;
}

LimitWindows tail_alpha_windows(const BackwardTail& tail, std::size_t L,
                                const StabilizationPolicy& policy) {
  if (L == 0) fail(Error::Kind::precondition, "window length must be >= 1");
  auto half = [&](std::int64_t n) { return sampled_windows(tail, -n, -n / 2 - 1, L); };
  auto n = static_cast<std::int64_t>(std::max<std::size_t>(policy.initial, 2));
  std::set<Word> previous = half(n);
  while (static_cast<std::size_t>(2 * n) <= policy.budget) {
    std::set<Word> next = half(2 * n);
    if (next == previous) {
      return {WindowSet(L, std::move(next)), Provenance::empirical(static_cast<std::size_t>(2 * n))};
    }
    previous = std::move(next);
    n *= 2;
  }
  fail(Error::Kind::non_stabilized, "backward window set still changing at " + std::to_string(n));
}

bool check_backward_orbital_limit_witness(const BackwardTail& po, const BackwardTail& traj,
                                          std::size_t L, const StabilizationPolicy& policy) {
  return tail_alpha_windows(po, L, policy).windows == tail_alpha_windows(traj, L, policy).windows;
}

}  // namespace limitsets
