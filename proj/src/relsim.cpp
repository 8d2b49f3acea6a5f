#include "rbw/relsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "rbw/common.hpp"

namespace rbw::relsim {

namespace {

void require_subluminal(const Boost& b) {
  if (!(b.c > 0.0)) throw Error(ErrorKind::InvalidArgument, "c must be positive");
  if (!(std::abs(b.v) < b.c))
    throw Error(ErrorKind::SuperluminalVelocity,
                "|v| = " + std::to_string(std::abs(b.v)) + " km/s is not below c = " + std::to_string(b.c));
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double parse_velocity(const std::string& text, double c) {
  std::string body = text;
  double scale = 1.0;
  if (!body.empty() && body.back() == 'c') {
    body.pop_back();
    scale = c;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (body.empty() || used != body.size() || !std::isfinite(v))
    throw Error(ErrorKind::ParseError, "bad velocity '" + text + "'");
  return v * scale;
}

double gamma(const Boost& boost) {
  require_subluminal(boost);
  const double beta = boost.v / boost.c;
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

SpacetimeEvent boost_event(const SpacetimeEvent& event, const Boost& boost) {
  const double g = gamma(boost);
  SpacetimeEvent out;
  out.label = event.label;
  out.t = g * (event.t - boost.v * event.x / (boost.c * boost.c));
  out.x = g * (event.x - boost.v * event.t);
  out.frame = boost.target_frame.empty() ? event.frame + "'" : boost.target_frame;
  return out;
}

std::vector<SpacetimeEvent> boost_events_serial(std::span<const SpacetimeEvent> events, const Boost& boost) {
  require_subluminal(boost);
  std::vector<SpacetimeEvent> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(boost_event(e, boost));
  return out;
}

std::vector<SpacetimeEvent> boost_events(std::span<const SpacetimeEvent> events, const Boost& boost) {
  require_subluminal(boost);
  const auto count = static_cast<std::int64_t>(events.size());
  std::vector<SpacetimeEvent> out(events.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = boost_event(events[static_cast<std::size_t>(i)], boost);
  return out;
}

std::vector<SimultaneityClass> simultaneity_classes(std::span<const SpacetimeEvent> events, const Boost& boost,
                                                    double tolerance) {
  for (const auto& e : events)
    if (e.frame != events.front().frame)
      throw Error(ErrorKind::MixedFrames, "event '" + e.label + "' is in frame '" + e.frame + "', expected '" +
                                              events.front().frame + "'");

  std::vector<SpacetimeEvent> boosted = boost_events_serial(events, boost);
  std::stable_sort(boosted.begin(), boosted.end(),
                   [](const SpacetimeEvent& a, const SpacetimeEvent& b) { return a.t < b.t; });

  std::vector<SimultaneityClass> classes;
  for (auto& e : boosted) {
    if (classes.empty() || std::abs(e.t - classes.back().events.front().t) > tolerance)
      classes.push_back({e.t, {}});
    classes.back().events.push_back(std::move(e));
  }
  return classes;
}

std::string to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::Timelike: return "timelike";
    case IntervalClass::Spacelike: return "spacelike";
    case IntervalClass::Null: return "null";
  }
  return "?";
}

IntervalClass interval_class(const SpacetimeEvent& e1, const SpacetimeEvent& e2, double c) {
  if (e1.frame != e2.frame)
    throw Error(ErrorKind::MixedFrames, "events '" + e1.label + "' and '" + e2.label + "' are in different frames");
  const double ct = c * (e2.t - e1.t);
  const double dx = e2.x - e1.x;
  const double s = ct * ct - dx * dx;
  const double scale = ct * ct + dx * dx;
  if (std::abs(s) <= 1e-12 * scale) return IntervalClass::Null;
  return s > 0.0 ? IntervalClass::Timelike : IntervalClass::Spacelike;
}

CoRealnessReport corealness_chain() {
  CoRealnessReport r;
  r.boost = Boost{0.6 * kLightSpeed, kLightSpeed, "girls"};
  const Boost back{-r.boost.v, r.boost.c, "boys"};
  const double g = gamma(r.boost);

  const SpacetimeEvent e1{"event 1 (Joe meets Sara)", 0.0, 0.0, "boys"};
  const SpacetimeEvent e2{"event 2 (Bob meets Kim)", 0.0, 1000.0, "boys"};
  const SpacetimeEvent e3{"event 3 (Bob meets Alice)", 0.002, 1000.0, "boys"};
  const SpacetimeEvent g1 = boost_event(e1, r.boost);
  const SpacetimeEvent g2 = boost_event(e2, r.boost);
  const SpacetimeEvent g3 = boost_event(e3, r.boost);

  r.links.push_back({"Joe meets Sara at t=" + fmt_num(e1.t) + " s, T=" + fmt_num(g1.t) + " s", e1, g1});
  r.links.push_back({"Bob meets Kim at t=" + fmt_num(e2.t) + " s, T=" + fmt_num(g2.t) + " s", e2, g2});
  r.links.push_back({"Bob passes Alice at t=" + fmt_num(e3.t) + " s, T=" + fmt_num(g3.t) + " s", e3, g3});
  r.links.push_back({"events 1 and 2 are co-real for the boys (both t=" + fmt_num(e1.t) + " s)", e2, g2});
  r.links.push_back({"events 1 and 3 are co-real for the girls (both T=" + fmt_num(g1.t) + " s)", e3, g3});

  // Kim at T=0: the girls' event at X=1250 km co-real with event 1
  const SpacetimeEvent kim_now_girls{"Kim at T=0", 0.0, g2.x, "girls"};
  const SpacetimeEvent kim_now_boys = boost_event(kim_now_girls, back);
  r.links.push_back({"Kim at T=0 sits at x=" + fmt_num(kim_now_boys.x) + " km, t=" + fmt_num(kim_now_boys.t) + " s",
                     kim_now_boys, kim_now_girls});

  r.conclusions.push_back("Sara at T=0 is co-real with Kim at T=" + fmt_num(g2.t) +
                          " s (through Joe and Bob at t=0) and with Kim at T=0 (girls' plane)");
  r.conclusions.push_back("Kim at T=0 is co-real with Kim at T=" + fmt_num(g2.t) +
                          " s: the past is as real as the present");
  r.conclusions.push_back("Bob at t=0 is co-real with Bob at t=" + fmt_num(e3.t) +
                          " s (through Sara and Alice at T=0): the future is as real as the present");

  r.boys_separation_boys_frame = e2.x - e1.x;
  r.boys_separation_girls_frame = g3.x - g1.x;
  r.sara_kim_girls_frame = g2.x - g1.x;
  r.sara_kim_boys_frame = e2.x - e1.x;
  r.kim_alice_girls_frame = g2.x - g3.x;

  // Kim and Alice where the boys' clocks read t = e3.t: the girls' time on each
  // worldline follows from t = γ(T + vX/c²).
  const auto at_boys_time = [&](double big_x, const char* who) {
    const double big_t = e3.t / g - r.boost.v * big_x / (r.boost.c * r.boost.c);
    return boost_event(SpacetimeEvent{who, big_t, big_x, "girls"}, back);
  };
  const SpacetimeEvent kim_later = at_boys_time(g2.x, "Kim");
  const SpacetimeEvent alice_later = at_boys_time(g3.x, "Alice");
  r.kim_alice_boys_frame = kim_later.x - alice_later.x;
  r.bob_at_alice_t = e3.t;
  r.kim_at_bob_T = g2.t;

  r.conclusions.push_back("the girls say the boys are " + fmt_num(r.boys_separation_girls_frame) + " km apart, not " +
                          fmt_num(r.boys_separation_boys_frame) + " km");
  r.conclusions.push_back("the boys say Alice is " + fmt_num(r.kim_alice_boys_frame) + " km behind Kim, not " +
                          fmt_num(r.kim_alice_girls_frame) + " km");
  return r;
}

}  // namespace rbw::relsim
