#pragma once

// Generated by tests/oracle/generate.py (mpmath); do not edit.

namespace oracle {

constexpr double kMoment0 = 1.812804954110954156;
constexpr double kMoment2 = 0.61270835123258882256;
constexpr double kMoment4_a07_bm03 = 1.0332486957200943862;
constexpr double kPcfScaled_m0_z0p5 = 0.69772798905191431282;
constexpr double kPcfScaled_m1_z2 = 0.73772574293842693233;
constexpr double kPcfScaled_m3_z5 = 0.76516761370328429636;
constexpr double kPcfScaled_m2_z20 = 0.98922833698492617173;
constexpr double kPcfExp_m0_zm1p5 = 3.993981185928237359;
constexpr double kPcfExp_m2_z0 = 0.81085347617168018874;
constexpr double kPcfExp_m2_z1 = 0.23524166721612081225;
constexpr double kJ1_a03_b05_c07 = 2.1001455248132263624;
constexpr double kJ1_a02_bm1_c04 = 11.58585449432957868;
constexpr double kWn2_a01_b1_c1_beta03_x02 = 0.66861876954424226678;
constexpr double kWn3_a01_b1_c1_beta03_x02 = 0.66805487759203378783;
constexpr double kWn3_a03_b05_c13_beta025_xm01 = 0.88239196989449718482;
constexpr double kMehler_k2_xi03_xfm04_nu07 = 0.31215720790407946465;
constexpr double kHarmPrefactor_b1 = 0.34105119953029897232;
constexpr double kHarmExponent_b1_x05 = -0.19898645694006092057;
constexpr double kHarmPrefactor_bm2 = 0.59165982755049693865;
constexpr double kHarmExponent_bm2_x05 = 0.11441438859007144094;
constexpr double kI0_gamma1_beta1 = 5.1375169671758011538;
constexpr double kRatio_gamma1_beta1 = 0.16833886355806013714;
constexpr double kRatio_trig_gsq_m4_beta1 = 0.70952997840194738504;
constexpr double kI1_gamma1_beta1 = 0.44199198904382181887;
constexpr double kI2_gamma1_beta1 = 0.11653956320046874416;
constexpr double kI10_gamma1_beta1 = 1.7949866374459184643;
constexpr double kI01_gamma1_beta1 = 0.47575470562249693827;
constexpr double kI20_gamma1_beta1 = 0.55735540167363194625;
constexpr double kI11_gamma1_beta1 = 0.097678459189456953386;
constexpr double kI43_gamma1_beta1 = 0.010646525595746517861;
constexpr double kI200_gamma1_beta1 = 1.3516955287546521298;
constexpr double kI110_gamma1_beta1 = 0.34080991784628421094;
constexpr double kI101_gamma1_beta1 = 0.11174987849923453941;
constexpr double kI1010_gamma1_beta1 = 0.29422323238168412247;
constexpr double kI10_trig_gsq_m4_beta1 = 0.10207930473008392336;
constexpr double kXFourier_a01 = 0.78456022958953466322;
constexpr double kGammaQuarterSq = 13.145047206596874413;

}  // namespace oracle
