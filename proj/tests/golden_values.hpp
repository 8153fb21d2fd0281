#pragma once
// Frozen reference values. Regenerate with tests/golden/gen_goldens.py;
// do not edit numbers by hand.

namespace golden {

struct FfPoint { double gamma; double delta; int sign; double exponent; double a2; };
inline constexpr FfPoint ff_points[] = {
    {0.05, 0, -1, 6.768555512676527, 0.0011493536792100815},
    {0.3, 0, -1, 3.187501504604166, 0.04127486728341356},
    {1.0, 0, -1, 0.8016104774629148, 0.44860591233265557},
    {2.6339157938496336, 0, -1, -1.0957638992989225, 2.9914669903287097},
    {5.0, 0, -1, -2.6256881635144795, 13.814077259814155},
    {12.0, 0, -1, -6.516704075666907, 676.3455240195892},
    {0.5, 0.2, -1, 2.1064252225430318, 0.12167214075865097},
    {1.0, 0.001, -1, 0.8019983460218375, 0.4484319459441421},
    {2.0, 1.0, -1, -0.4662868500573184, 1.594064191177207},
    {0.0, 1.5707963267948966, -1, 0.5543128314373734, 0.5744668811767002},
    {4.0, 1.5, -1, -1.9132291066441578, 6.774930488032715},
    {0.7, 2.8, -1, -0.07362764554948144, 1.0764059263290475},
    {10.0, 0.3, -1, -5.4254262193549, 227.10812356756344},
    {0.0, 1.5707963267948966, +1, 0.13883434912257192, 0.8703721944350088},
    {1.0, 0, +1, 0.5020341744311395, 0.6052981245736817},
    {0.3, 0.4, +1, 0.44122557708665167, 0.6432475882889298},
    {3.0, 1.2, +1, -0.33069267320894946, 1.3919319485885226},
    {8.0, 0.05, +1, -2.286393126413689, 9.839384186309792},
    {0.05, 2.9, +1, 0.0030612829574099987, 0.9969433979914747},
    {20.0, 1.5707963267948966, +1, -7.852490143172344, 2572.131324052284},
};

inline constexpr double ff_I_gamma1_delta0 = 0.8016104774629148;
inline constexpr double ff_I_gamma1_delta1em3 = 0.8019983460218375;
inline constexpr double ff_a2_gamma1_delta0 = 0.44860591233265557;
inline constexpr double ff_a2_gamma1_delta1em3 = 0.4484319459441421;
inline constexpr double ff_continuity_gap = 0.0001739663885134775;
inline constexpr double a2_gamma_sweep[4] = {0.44860591233265557, 1.7286200383410546, 7.577960558936598, 75.79238461527251};
inline constexpr double a2_2asinh_sqrt3 = 2.991466990328709;
inline constexpr double a_plus_sq_ipi2 = 0.8703721944350088;
inline constexpr double a_minus_sq_ipi2 = 0.5744668811767002;
inline constexpr double pair_product_combined = 0.5;
inline constexpr double prefactor = 0.5637352484173966;
inline constexpr double gamma_quarter = 3.625609908221908;
inline constexpr double gamma_three_quarter = 1.2254167024651776;

inline constexpr double pi_over_cosh1 = 2.0359225452699317;
inline constexpr double invert_pi_pi_beta = 1.3169578969248168;  // pair is -/+ this
inline constexpr double invert_12pi_halfpi_beta1 = -2.1680998040435;
inline constexpr double invert_12pi_halfpi_beta2 = -0.22979546875487067;
inline constexpr double s2_pi_pi = 0.30991950197266155;
inline constexpr double s2_12pi_halfpi = 0.38989273786664824;
inline constexpr double upper_edge_s[5] = {0.023536926263241553, 0.007385611528061571, 0.002333738124363934, 0.0007379360152235346, 0.00023335406225162222};
inline constexpr double lower_edge_s[5] = {4.894790860522412, 17.773006599116037, 62.82598729550445, 217.95492117882537, 745.7221197329036};
inline constexpr double lower_edge_product[5] = {0.5583689169157338, 0.6411328001501332, 0.7166818660891353, 0.7862375346714378, 0.8506758800945505};
inline constexpr double fixed_k_weight_half_pi = 0.8692765152223688;

struct Pt2 { double x; double value; };
inline constexpr Pt2 ci_values[] = {
    {0.5, -0.1777840788066129},
    {2.0, 0.422980828774865},
    {10.0, -0.04545643300445537},
    {100.0, -0.005148825142610492},
    {700.0, 0.0007788100127397563},
};
inline constexpr Pt2 e1_real_values[] = {
    {0.5, 0.5597735947761608},
    {2.0, 0.04890051070806112},
    {10.0, 4.156968929685325e-06},
    {30.0, 3.0215520106888124e-15},
};
struct E1Cplx { double re; double im; double val_re; double val_im; };
inline constexpr E1Cplx e1_complex_values[] = {
    {0.3, 0.4, 0.4274740146983844, -0.5845502883110028},
    {1.0, 2.0, -0.1267842855915597, -0.03508158292818701},
    {3.0, -4.0, 0.0008639539589795851, -0.008786208377197442},
    {30.0, -10.0, -1.814478073838587e-15, -2.2299884151733475e-15},
    {0.001, 0.001, 5.984966023689562, -0.7843986632863372},
    {0.0, 2.6, -0.2533366160625842, 0.22959812373187355},
};
inline constexpr Pt2 gd_values[] = {
    {0.5, 0.48038107913372946},
    {3.0, 1.4713043411171927},
    {20.0, 1.5707963226725894},
    {-20.0, -1.5707963226725894},
};

struct EllipticPoint { double nome; double m; double mc; double log_mc; double K; double K_prime; };
inline constexpr EllipticPoint elliptic_moduli[] = {
    {0.04, 0.47342805149571376, 0.5265719485042862, -0.6413673024153306, 1.832194207367261, 1.877266180202909},
    {0.04321391826377225, 0.5, 0.5, -0.6931471805599453, 1.8540746773013719, 1.8540746773013719},
    {0.3, 0.9956043683608302, 0.004395631639169759, -5.427144040499092, 4.103280842697205, 1.5725267683809985},
    {0.5, 0.9999895221373104, 1.0477862689610825e-05, -11.466245841701369, 7.119433311665984, 1.570800441466204},
    {0.9, 1.0, 3.3247356066678877e-40, -90.90201356560725, 46.83730114392352, 1.5707963267948966},
};
struct AmDnPoint { double nome; double u_frac; double am; double dn; };
inline constexpr AmDnPoint am_dn_points[] = {
    {0.04, 0.25, 0.45080739454152335, 0.9540074209202314},
    {0.04, 0.7, 1.1626676099682334, 0.7753373737359917},
    {0.04, 1.0, 1.5707963267948966, 0.7256527740622827},
    {0.3, 0.25, 0.8829576684486004, 0.6369319363093295},
    {0.3, 0.7, 1.4670970745802459, 0.12273376152066928},
    {0.3, 1.0, 1.5707963267948966, 0.06629955987161422},
    {0.5, 0.25, 1.2366233589707318, 0.3280022541332451},
    {0.5, 0.7, 1.5572888968156027, 0.01388940315300271},
    {0.5, 1.0, 1.5707963267948966, 0.003236952685723229},
    {0.9, 0.25, 1.570779893122045, 1.6433672851073144e-05},
    {0.9, 0.7, 1.570796326794885, 1.1539925147704216e-14},
    {0.9, 1.0, 1.5707963267948966, 1.8233857536648376e-20},
};
struct QAniso { double q; double m; double mc; double log_mc; double K; double K_prime; };
inline constexpr QAniso q_aniso[] = {
    {-0.1, 0.8024032982175762, 0.19759670178242378, -1.6215271851921673, 2.2627007631944456, 1.658413938956859},
    {-0.5, 0.9999895221373104, 1.0477862689610825e-05, -11.466245841701369, 7.119433311665984, 1.570800441466204},
    {-0.9, 1.0, 3.3247356066678877e-40, -90.90201356560725, 46.83730114392352, 1.5707963267948966},
};

inline constexpr double qp_half_half = 0.2887880950866024;
inline constexpr double qp_cplx_re = 0.41676626298408215;
inline constexpr double qp_cplx_im = -0.29894605948690595;
inline constexpr double theta_01_03 = 0.3867137611857652;
inline constexpr double tau_q05_a04_re = -0.9481326596452956;
inline constexpr double tau_q05_a04_im = -0.3178749120549436;
inline constexpr double xxz_e_q05_a04 = 1.0805958783880354;
inline constexpr double xxz_p_q05_a04 = -0.32348730235829853;
inline constexpr double xxz_e_q06_a07 = 0.08855024141526147;
inline constexpr double xxz_p_q06_a07 = -0.0269989712181916;
inline constexpr double xxz_e_q09_a03 = 0.0008205472249684809;
inline constexpr double xxz_p_q09_a03 = -0.00026070568701194366;

struct LimitErr { double eps; double beta; double err; };
inline constexpr LimitErr limit_errors[] = {
    {0.5, 0.0, 0.13254574856583054},
    {0.5, 0.5, 0.11754408125529817},
    {0.5, 1.0, 0.08589687017315073},
    {0.5, 2.0, 0.03523107789459992},
    {0.2, 0.0, 0.02098587884139084},
    {0.2, 0.5, 0.01861067365325341},
    {0.2, 1.0, 0.01359998846975584},
    {0.2, 2.0, 0.005578093370083638},
    {0.1, 0.0, 0.0052386063732794376},
    {0.1, 0.5, 0.004645695057510188},
    {0.1, 1.0, 0.003394901248246607},
    {0.1, 2.0, 0.0013924332500020893},
    {0.05, 0.0, 0.0013091605733530204},
    {0.05, 0.5, 0.0011609883185985477},
    {0.05, 1.0, 0.0008484071044736874},
    {0.05, 2.0, 0.0003479777982989345},
};

inline constexpr double ed_e0_n4 = -3.999999999999999;
inline constexpr double ed_e0_n8 = -7.3021868178743485;
inline constexpr double ed_e0_n10 = -9.030892708984082;
inline constexpr double ed_e0_n12 = -10.774781834890405;
inline constexpr double ed_totals_n8[8] = {1.720905326285138, 0.6527235986093474, 0.3383782524457865, 0.14844548580229494, 9.197465296262951e-31, 0.14844548580229497, 0.3383782524457866, 0.6527235986093474};
// lowest sigma^- weighted excitation at lattice k-index 0, N = 8, 10, 12
inline constexpr double ed_lowest_k0[3] = {1.0453486901851923, 0.8464780155067544, 0.7116950274055327};
inline constexpr double ed_lowest_n8_kquarter = 3.592911458437426;
inline constexpr double ed_lowest_n12_kquarter = 3.4531932713845954;

}  // namespace golden
