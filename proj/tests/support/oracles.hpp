#pragma once
// Reference values computed offline with mpmath at 30 digits (direct quadrature
// of the defining integrals), frozen here.

#include <array>

namespace glt::testing {

inline constexpr std::array<double, 4> kOracleS{1.0, 1.5, 2.0, 3.5};
inline constexpr std::array<double, 7> kOracleX{1e-6, 0.01, 0.5, 1.0, 3.7, 20.0, 50.0};

// E_s(x): rows follow kOracleX, columns kOracleS.
inline constexpr double kExpIntE[7][4] = {
    {13.238295893062491, 1.9964570922978556, 0.99998576170460694, 0.39999933333433239},
    {4.0379295765381138, 1.6654759630333674, 0.94967053798378691, 0.393424213302017},
    {0.55977359477616081, 0.41768182857856395, 0.32664386232455302, 0.18958696449527318},
    {0.21938393439552027, 0.17814771178156069, 0.14849550677592205, 0.09655664863127516},
    {0.0054478246567704624, 0.0049724166866427157, 0.004566575240288675, 0.0036481669881045677},
    {9.8355252906498817e-11, 9.6155519104904128e-11, 9.404856430858149e-11, 8.823083382622172e-11},
    {3.783264029550459e-24, 3.7471888149173398e-24, 3.7117833188688274e-24, 3.6094065782262261e-24},
};

// Lower incomplete gamma gamma(s, x), same layout.
inline constexpr double kLowerGamma[7][4] = {
    {9.9999950000016662e-7, 6.6666626666680948e-10, 4.9999966666679162e-13, 2.8571406349215436e-22},
    {0.0099501662508319466, 0.00066268091541954492, 4.9667913340265892e-5, 2.8350112881558644e-8},
    {0.39346934028736658, 0.17613586717520105, 0.090204010431049865, 0.017186588186473852},
    {0.63212055882855768, 0.3789446916409847, 0.26424111765711536, 0.13346454955364451},
    {0.97527647352966061, 0.83288995714745748, 0.88379942558940488, 2.0323877263285463},
    {0.99999999793884638, 0.88622691600993007, 0.99999995671577393, 3.3233467870455871},
    {1.0, 0.88622692545275801, 1.0, 3.3233509704478425},
};

struct MarginalOracle {
  double beta, tau, xi, value;
};

// GLT marginal of beta.
inline constexpr std::array<MarginalOracle, 5> kGltMarginal{{
    {1.0, 1.0, 1.0, 0.10105771959856732},
    {0.3, 0.001, 2.0, 0.027898166093917588},
    {5.0, 1.0, 1.5, 0.011204949867936466},
    {0.05, 0.001, 3.0, 0.53339825382003527},
    {10.0, 1.0, 0.6, 0.00216970896000073},
}};

// Horseshoe marginal of beta (xi unused).
inline constexpr std::array<MarginalOracle, 3> kHsMarginal{{
    {1.0, 1.0, 0.0, 0.1171979033975241},
    {0.1, 1.0, 0.0, 0.60316225316350206},
    {10.0, 0.001, 0.0, 2.5397453865747319e-6},
}};

}  // namespace glt::testing
