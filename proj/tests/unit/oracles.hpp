#pragma once

// Reference values computed once with 30-digit arithmetic and frozen here.
namespace oracle {

inline constexpr double kExp3Minus10 = 10.0855369231876677;
inline constexpr double kExp3 = 20.0855369231876677;
inline constexpr double kDerivNearBoundary = 10.1005016708416806;  // |F'(log 10 + 0.01)|
inline constexpr double kLn20 = 2.99573227355399099;
inline constexpr double kLn30 = 3.40119738166215538;
inline constexpr double kHypDerivAt3 = 5.97455655841455211;
inline constexpr double kOnePlusLn2 = 1.69314718055994531;
inline constexpr double kTwoOnePlusLn2 = 3.38629436111989062;
inline constexpr double kFixedPoint = 2.52796320198217425;  // z = ln(z + 10)
inline constexpr double kBranch1Re = 2.66462898439789002;   // z = ln(z + 10) + 2 pi i
inline constexpr double kBranch1Im = 6.77436493294247092;
inline constexpr double kCycle01Re = 2.64195115873685282;   // period-2 word (0, 1)
inline constexpr double kCycle01Im = 0.46691245583703161;
inline constexpr double kCycle01PartnerRe = 2.53770232036236117;
inline constexpr double kCycle01PartnerIm = 6.32010210271125179;
inline constexpr double kTwoAbsKappa = 0.72111025509279785;  // 2|0.3 + 0.2i|
inline constexpr double kMu = 1.24110430350535325;           // log(1 + log 5.5 / log 2)
inline constexpr double kCeilingRe3 = 2.58564636477666213;
inline constexpr double kCeilingRe20 = 0.0417335989602768682;
inline constexpr double kMaxOnCircle07 = 0.50687635373523822;  // max |0.5(e^z - 1)| on |z| = 0.7

}  // namespace oracle
