#pragma once

// Frozen reference values, 21 significant digits, produced with mpmath at
// 30 digits working precision. Tests compare library output against these.

#include <complex>

namespace oracles {

using cplx = std::complex<double>;

// zeta
inline const cplx zeta_2{1.64493406684822643647, 0.0};
inline const cplx zeta_3_4i{0.890554906965073258143, -0.00807594542432725984681};
inline const cplx zeta_half_100i{2.69261988568132409048, -0.0203860296025981617707};
inline const cplx zeta_m2p5_30i{-104.127798221042076744, 16.6925915534469331547};
inline const cplx zeta_1_1966p6i{1.51903435158676693562, 1.83327797868954249965};
inline const cplx zeta_half{-1.46035450880958681289, 0.0};
inline const cplx zeta_1p5_983p3i{0.872560570977177964711, 0.0816310932323406635049};
inline const cplx zeta_m5p25_49i{130594.569250952375626, -33310.9105244949106104};

// log_gamma
inline const cplx lgam_half_983p5i{-1543.95924886957615227, 5793.91423917063666738};
inline const cplx lgam_4_3i{0.634808804586117364566, 4.07058843011164500376};
inline const cplx lgam_m3p6_0p4i{-2.05770170304076762218, -12.2698757604623287904};
inline const cplx lgam_quarter_491p65i{-772.912517273492279998, 2555.08950759030557833};
inline const cplx lgam_25{54.7847293981123191901, 0.0};
inline const cplx lgam_m6p3_2p1i{-11.5885930715694725165, -17.3031057883741409834};

// digamma
inline const cplx digamma_4p2_3p7i{1.65491612919730600135, 0.783876558139034300929};
inline const cplx digamma_25{3.19874251285197400853, 0.0};
inline const cplx digamma_m3p6_0p4i{1.1551448262915123305, 2.6466255031894575992};
inline const cplx digamma_half{-1.96351002602142347944, 0.0};

// xi1
inline const cplx xi1_2{0.523598775598298873077, 0.0};
inline const cplx xi1_half{-3.9769662255065128793, 0.0};
inline const cplx xi1_3_4i{0.000198187808296115814008, -0.0357153039377331184632};
inline const cplx xi1_0p3_14p2i{0.00000123413070255669550802, 0.00000248838138979815910172};
inline const cplx xi1_1_30i{1.30852066158133083238e-11, 5.14149542850743157729e-11};

// a_func / d_func / f6
inline const cplx a_2_3i{0.504343871883904950821, 0.151084580430603707684};
inline const cplx a_0p75{0.160150795206389965244, 0.0};
inline const cplx a_0p3_14p2i{0.707621919729409520149, 0.180081809708273659451};
inline const cplx a_6_981p33i{0.960019237537720625924, 0.0368284142693492943001};
inline const cplx a_m2_10i{0.676885261263580075885, 0.222217484896266187393};
inline const cplx d_2_3i{1.92173590714248042773, -0.0124801183039823213566};
inline const cplx d_half_30i{2.14823990987640912738, 0.455069188542678721725};
inline const cplx d_4_100i{2.5925180526774509909, 0.732510453534918863007};
inline const cplx d_m1p3_7i{1.82684951643365268183, 0.182019123864579742731};
inline const cplx f6_2_3i{1.11527439353371568663, 0.0000966545962448444867116};
inline const cplx f6_half_14p2i{0.956667758642393851701, 0.291181729464845482546};
inline const cplx f6_half_100i{0.845184514752000658857, 0.534474635528595669828};
inline const cplx f6_half_983p5i{0.759252725608506018015, 0.650795896311627544298};
inline const cplx f6_3_50i{0.889212231632697663866, 0.47102906773773753075};
inline const cplx f6_m2_10i{0.927267282239219936928, 0.224119131536326791484};

// delta6
inline const cplx delta6_2_3i{1.00553433964673134934, 0.00527782261569211979667};
inline const cplx delta6_0p7_30i{1.26545934127939420258, -0.0371906371752900159773};
inline const cplx delta6_0p3_14p2i{0.902632904038308763275, -0.173093781575636496918};
inline const cplx delta6_6_981p33i{1.00009107471135878393, 5.90197126584108566807e-7};
inline const cplx delta6_0p52_983p3i{0.644928675680864892124, -0.244063076296703000389};
inline const cplx delta6_m2p2_10i{1.02003083955176827873, -0.248433322548944491209};
inline const cplx delta6_m5p9_49i{0.898841066196422869935, -0.474583007605598544313};
inline const cplx delta6_4_100i{0.998735625423938717858, 0.0000564958691517842625784};
inline const cplx delta6_8_983p6i{0.99999424783183703953, 5.25586033785819029538e-8};
inline const cplx delta6_0p45_983p5i{0.61447771583196356788, -0.248346251968117043369};
inline const double delta6_0p26 = -1.21017385693793423325;
inline const double delta6_quarter = -1.37823428610825622305;
inline const double delta6_6 = 1.0000056072596559482;
inline const double delta6_10 = 0.999999956078940897227;
inline const cplx delta6_half_983p081264i{-1.11341808867485313298, 0.411873995598354255953};

// T_plus on the critical line
inline const double tplus_half = -1.95380858206775793237;
inline const cplx tplus_half_3i{-0.0221254525237394675507, 0.0};
inline const double tplus_half_30i_re = 4.7830712572986268904e-21;
inline const double tplus_half_100i_re = 3.90995900812524270227e-68;

// local expansion slopes at the two on-axis zeros
inline const double slope_at_half = 1.33790019497417237922;
inline const double slope_at_three_quarters = -1.6162071669418864886;

// real-axis landmarks
inline const double unity_crossing_sigma = 7.0454087351077446048;
inline const double delta6_at_0_limit = 2.40516176603075038758;

// roots of Gamma(s) + sqrt(pi) Gamma(s-1/2): off-half-integer poles of delta6
inline const double bracket_roots[7] = {
    0.136316828457738915196,
    -0.803976678868116769296,
    -1.76721537814426359961,
    -2.74140143690687743072,
    -3.72192539246251887154,
    -4.70653408902525771005,
    -5.69396560268594965864,
};

// first zeta-zero ordinates halved: lowest critical-line poles of delta6
inline const double pole_t[5] = {
    7.06736257086734689523,
    10.5110198193857774963,
    12.5054287900728443816,
    15.2124380629297566052,
    16.4675307938695948453,
};

// arg f6 on the critical line
inline const double argf6_14p2 = 0.29546186180731166959;
inline const double argf6_100 = 0.563886027506525473218;
inline const double argf6_983p5 = 0.708632229095567267002;

// counterexample closed-form constants (delta_sigma0=-0.05, t0=983.5,
// t1=983.3, t2=983.7) and the c2-nulled t0
inline const double c2_reference = 0.085;
inline const double c4_theory_reference = 164436.282925;
inline const double t0_nulled = 983.500021606507134295;

// [980,985] critical-line census: 18 events, pattern ZPPZPZZP is false,
// measured pattern ZPZPZPZPZPZPPZZPZP
struct Event {
    double t;
    char kind;
};
inline const Event census_980_985[18] = {
    {980.091843152, 'Z'}, {980.209422635, 'P'}, {980.607187638, 'Z'},
    {980.679638940, 'P'}, {981.091208511, 'Z'}, {981.116785924, 'P'},
    {981.690780139, 'Z'}, {981.810592287, 'P'}, {982.150287936, 'Z'},
    {982.178695469, 'P'}, {982.642036049, 'Z'}, {982.688914753, 'P'},
    {983.058829287, 'P'}, {983.107862637, 'Z'}, {984.015787036, 'Z'},
    {984.235801010, 'P'}, {984.492575707, 'Z'}, {984.523808773, 'P'},
};

// phase-zero line landings (seeds n=430..436 from sigma=6), alternating by
// parity, and the strictly-below counts at each landing
struct Landing {
    int n;
    char kind;
    double t;
    int count;
};
inline const Landing landings[7] = {
    {430, 'Z', 975.215734716, 1471}, {431, 'P', 976.425064606, 1474},
    {432, 'Z', 978.350436454, 1477}, {433, 'P', 981.810592287, 1484},
    {434, 'Z', 984.015787036, 1487}, {435, 'P', 985.152504759, 1490},
    {436, 'Z', 988.326091279, 1495},
};

// sigma = 0.45 samples of delta6 at the seven landing ordinates
inline const double bridging_args[7] = {
    -1.63913000720559, -1.61384719714741, -1.35150578908809,
    -1.55656408433491, -1.71847245058838, -1.57507429768068,
    -1.71124881674392,
};
inline const int bridging_quadrants[7] = {3, 3, 4, 4, 3, 3, 3};

// full-range strictly-below event counts
inline const int n_events_below_989p5 = 1498;

// Bernoulli numbers B_2..B_30
inline const double bernoulli_2n[15] = {
    0.166666666666666666667,
    -0.0333333333333333333333,
    0.0238095238095238095238,
    -0.0333333333333333333333,
    0.0757575757575757575758,
    -0.253113553113553113553,
    1.16666666666666666667,
    -7.09215686274509803922,
    54.9711779448621553885,
    -529.124242424242424242,
    6192.12318840579710145,
    -86580.2531135531135531,
    1425517.16666666666667,
    -27298231.067816091954,
    601580873.900642368384,
};

}  // namespace oracles
