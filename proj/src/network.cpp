#include "hdcap/network.hpp"

// The network operations are templated and live in the header; this
// translation unit pins the common instantiations so clients link fast.

namespace hdcap {

template struct BasicRelayLinks<double>;
template struct BasicRelayLinks<Rational>;
template struct BasicDiamondNetwork<double>;
template struct BasicDiamondNetwork<Rational>;

template std::vector<std::string> validate(const BasicDiamondNetwork<double>&);
template std::vector<std::string> validate(const BasicDiamondNetwork<Rational>&);
template std::pair<int, double> best_relay(const BasicDiamondNetwork<double>&);
template std::pair<int, Rational> best_relay(const BasicDiamondNetwork<Rational>&);
template BasicDiamondNetwork<double> scale(const BasicDiamondNetwork<double>&, const double&);
template BasicDiamondNetwork<Rational> scale(const BasicDiamondNetwork<Rational>&, const Rational&);
template BasicNormalizedNetwork<double> normalize(const BasicDiamondNetwork<double>&);
template BasicNormalizedNetwork<Rational> normalize(const BasicDiamondNetwork<Rational>&);

}  // namespace hdcap
