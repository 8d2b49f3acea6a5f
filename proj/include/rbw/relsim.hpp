#pragma once

#include <span>
#include <string>
#include <vector>

namespace rbw::relsim {

/// Speed of light in km/s.
inline constexpr double kLightSpeed = 300000.0;

/// Simultaneity tolerance in seconds.
inline constexpr double kSimultaneityTolerance = 1e-12;

/// An event in 1+1 spacetime: t in seconds, x in kilometres.
struct SpacetimeEvent {
  std::string label;
  double t = 0.0;
  double x = 0.0;
  std::string frame;
};

/// Boost into a frame moving at v (km/s) along +x relative to the current one.
struct Boost {
  double v = 0.0;
  double c = kLightSpeed;
  std::string target_frame;  // label given to boosted events; "<frame>'" when empty
};

/// Parses "0.6c" (fraction of c) or a plain km/s value.
double parse_velocity(const std::string& text, double c = kLightSpeed);

/// 1/√(1 − v²/c²). Throws SuperluminalVelocity.
double gamma(const Boost& boost);

/// T = γ(t − vx/c²), X = γ(x − vt). Throws SuperluminalVelocity.
SpacetimeEvent boost_event(const SpacetimeEvent& event, const Boost& boost);

/// Reference loop and an OpenMP-parallel version over a batch of events.
std::vector<SpacetimeEvent> boost_events_serial(std::span<const SpacetimeEvent> events, const Boost& boost);
std::vector<SpacetimeEvent> boost_events(std::span<const SpacetimeEvent> events, const Boost& boost);

struct SimultaneityClass {
  double time = 0.0;  // common boosted time
  std::vector<SpacetimeEvent> events;
};

/// Partitions events by equal boosted time, classes ordered by time.
/// Throws MixedFrames.
std::vector<SimultaneityClass> simultaneity_classes(std::span<const SpacetimeEvent> events, const Boost& boost,
                                                    double tolerance = kSimultaneityTolerance);

enum class IntervalClass { Timelike, Spacelike, Null };
std::string to_string(IntervalClass c);

/// Sign of c²Δt² − Δx², null when it vanishes relative to c²Δt² + Δx².
/// Throws MixedFrames.
IntervalClass interval_class(const SpacetimeEvent& e1, const SpacetimeEvent& e2, double c = kLightSpeed);

struct CoRealLink {
  std::string statement;
  SpacetimeEvent boys_view;
  SpacetimeEvent girls_view;
};

/// The two-frame, five-observer story: Joe (x=0) and Bob (x=1000 km) in the
/// boys' frame; Sara (X=0), Alice (X=800 km), Kim (X=1250 km) in the girls'
/// frame, moving at +0.6c.
struct CoRealnessReport {
  Boost boost;
  std::vector<CoRealLink> links;
  std::vector<std::string> conclusions;

  double boys_separation_boys_frame = 0.0;   // Joe–Bob, boys
  double boys_separation_girls_frame = 0.0;  // Joe–Bob, girls (contracted)
  double sara_kim_girls_frame = 0.0;
  double sara_kim_boys_frame = 0.0;
  double kim_alice_girls_frame = 0.0;
  double kim_alice_boys_frame = 0.0;
  double bob_at_alice_t = 0.0;  // Bob's clock when he meets Alice
  double kim_at_bob_T = 0.0;    // Kim's clock when she meets Bob
};

CoRealnessReport corealness_chain();

}  // namespace rbw::relsim
