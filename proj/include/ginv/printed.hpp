#pragma once

#include <string_view>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv::printed {

// Published Taylor coefficients and elimination results, kept verbatim as
// text so they can be diffed against the literature.

inline constexpr std::string_view kC2 = "1/4*a + 1/4*b + 1/4*c + 1/4*d - 1/2*p - 1/2*q";
inline constexpr std::string_view kC4 = "1/3*t*w - 1/3*v*s - 1/3*w*r";
inline constexpr std::string_view kC6Numerator =
    "-2*(-3*w^2*s^2 + 3*v^2*s^2 - 15*w^2*r*v^2 - 5*w^3*s*v - 10*v^3*s*w + 15*w^4*v^2)";
inline constexpr std::string_view kC6Denominator = "45*w";

inline constexpr std::string_view kRNumerator = "15*w^4*v^2 - 3*w^2*s^2 + 3*v^2*s^2 - 5*w^3*v*s - 10*w*v^3*s";
inline constexpr std::string_view kRDenominator = "15*w^2*v^2";

inline constexpr std::string_view kP8 =
    "2100*w^3*v^5 - 3850*w^2*v^4*s + 4200*w^5*v^3 - 255*w*v^3*s^2 + 153*v^2*s^3"
    " - 9245*w^4*v^2*s - 7395*w^3*v*s^2 - 153*w^2*s^3";

inline constexpr std::string_view kP10 =
    "28500*w^5*v^9 - 59675*w^4*v^8*s + 34470*w^3*v^7*s^2 + 20100*w^7*v^7"
    " - 299575*w^6*v^6*s - 4260*w^2*v^6*s^3 - 73200*w^5*v^5*s^2 - 930*w*v^5*s^4 + 66600*w^9*v^5"
    " + 4805*w^4*v^4*s^3 - 286500*w^8*v^4*s + 279*v^4*s^5 - 169020*w^7*v^3*s^2 - 16740*w^3*v^3*s^4"
    " - 558*w^2*v^2*s^5 + 45955*w^6*v^2*s^3 + 17670*w^5*v*s^4 + 279*w^4*s^5";

inline constexpr std::string_view kP12 =
    "-3272692500*w^10*v^8*s + 22181100*w^3*v^9*s^4 - 54365475*w^6*v^8*s^3"
    " - 25317375*w^8*v^6*s^3 + 335826*w^4*v^2*s^7 - 559710*w*v^7*s^6 - 215221875*w^6*v^12*s"
    " + 22875570*w^6*v^4*s^5 + 16977870*w^5*v^3*s^6 - 7649370*w^3*v^5*s^6 - 1246797750*w^8*v^10*s"
    " - 34684335*w^8*v^2*s^5 - 777170000*w^11*v^5*s^2 - 159926550*w^7*v^5*s^4 - 335826*w^2*v^4*s^7"
    " + 641072375*w^10*v^4*s^3 + 270963000*w^5*v^11*s^2 - 1046615000*w^9*v^7*s^2 + 11659365*w^4*v^6*s^5"
    " - 133190250*w^5*v^7*s^4 - 1967022000*w^12*v^6*s + 177650700*w^9*v^3*s^4 - 8768790*w^7*v*s^6"
    " + 385915750*w^7*v^9*s^2 + 149400*w^2*v^8*s^5 - 98002025*w^4*v^10*s^3 + 76725000*w^7*v^13"
    " - 57172500*w^9*v^11 - 478665000*w^11*v^9 + 188100000*w^13*v^7 - 111942*w^6*s^7 + 111942*v^6*s^7";

inline constexpr std::string_view kC8Prefactor = "(v - w)*(v + w)*s";
inline constexpr std::string_view kC8Denominator = "70875*w^3*v^2";
inline constexpr std::string_view kC10Prefactor = "2*(v - w)*(v + w)*s";
inline constexpr std::string_view kC10Denominator = "1063125*w^5*v^4";
inline constexpr std::string_view kC12Prefactor = "2*(v - w)*(v + w)*s";
inline constexpr std::string_view kC12Denominator = "2631234375*w^7*v^6";

/// Known factor of resultant(P8, P10, s).
inline constexpr std::string_view kR810KnownFactor = "136687500*w^15*v^15*(v - w)^2*(v + w)^2";

/// Coefficients of z^0, z^2, …, z^18 in P_{8,10}.
inline const std::vector<std::string_view> kP810 = {
    "1178440166794705680",      "-34849488132334981400",     "27095657773476976150",
    "2157163953185024831539",   "19335728720363587723895",   "77098340762854904758838",
    "135541716064734053550290", "52974528518488497499557",   "2100034048587009260985",
    "44498612407766474466",
};

/// Coefficients of z^0, z^2, …, z^26 in P_{8,12}.
inline const std::vector<std::string_view> kP812 = {
    "8196063700595383871701091232",
    "-179090512353635410423157248720",
    "-2262574745604112043731392907114",
    "11198535065282946302316347517923",
    "369075355861065090753396085824722",
    "3321203212966063219800014204539694",
    "17018221168597358591328346358640128",
    "55161742271395394206883716537690208",
    "113024609788553283598449985201081964",
    "136472191224999845881431378284988722",
    "83840233563357841801204648333566258",
    "19391722782753178903737004919064981",
    "1234978033803167388960240130106010",
    "95711050739605210548400442203992",
};

}  // namespace ginv::printed
