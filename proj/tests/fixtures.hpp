// Multidegree pairs with equal Sullivan data, used across test binaries.
#ifndef CISD_TESTS_FIXTURES_HPP
#define CISD_TESTS_FIXTURES_HPP

namespace fixtures {

// equal in dimension 4
inline constexpr const char* kFlagshipA = "3^150,7^89,9^65,15,25^130";
inline constexpr const char* kFlagshipB = "5^261,21^89,27^64";

// Found by lattice reduction on prime valuations and power sums; frozen after
// an independent re-check of the Sullivan data.
// equal in dimensions <= 6, all degrees odd
inline constexpr const char* kOddSixA = "69,57^4,51^3,27^6,21,15^2,7^3,5^4";
inline constexpr const char* kOddSixB = "63^4,45^6,23,19^4,17^3,9^2,3^5";
// equal in dimensions <= 6, 2-adically deep total degree
inline constexpr const char* kEvenSixA = "38^2,36,26,24^2,17^3,10^5,9,4^2,3^2";
inline constexpr const char* kEvenSixB = "40,34^3,20,19^2,18^2,13,12^2,8,6^2,5^3,2";
// equal in dimensions <= 8, all degrees odd
inline constexpr const char* kOddEightA = "99^3,87^80,75^130,33^49,31^24,27^10,23^52,21^140,9^154,5^80";
inline constexpr const char* kOddEightB = "93^24,81^140,69^52,29^80,25^130,15^80,11^52,7^140,3^27";

} // namespace fixtures

#endif
