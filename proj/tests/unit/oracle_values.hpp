// Generated by tests/oracles/gen_oracles.py. Do not edit.
#pragma once
#include <array>
#include <vector>

namespace oracle {
inline constexpr double pois_m1 = 2.0;
inline constexpr double pois_m2 = 6.000000000000001;
inline constexpr double pois_m3 = 22.0;
inline constexpr double pois_pgf_2 = 0.20189651799465538;
inline constexpr double pois_pgf_5 = 0.3678794411714423;
inline constexpr double pois_pgf_8 = 0.6703200460356393;
inline constexpr double pmf_m1 = 2.0;
inline constexpr double pmf_m2 = 6.1253561253561255;
inline constexpr double pmf_m3 = 22.26520395281006;
inline constexpr double pmf_pgf_2 = 0.22019060922766842;
inline constexpr double pmf_pgf_5 = 0.37979058622462675;
inline constexpr double pmf_pgf_8 = 0.6727754336897361;
inline constexpr double pois_sigma2_alpha = 0.31944444444444436;
inline constexpr std::array<double, 4> pois_b_mat = {0.8749999999999986, -1.4999999999999967, -1.4999999999999967, 3.999999999999993};

struct FitCase {
  const char* tag;
  bool additive;
  std::vector<int> times;
  bool mu_known;
  double mu;
  std::vector<long> y;
  std::vector<double> params;  // alpha, [mu], theta...
  double objective;
};

inline const std::vector<FitCase>& fit_cases() {
  static const std::vector<FitCase> cases = {
    {"ADD1", true, {20}, true, 1.0,
     {2, 3, 3, 2, 2, 3, 2, 3, 4, 3, 2, 1, 1, 2, 1, 1, 0, 2, 3, 1, 8, 2, 3, 2, 3, 4, 2, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 2, 2, 3, 2, 1, 1, 3, 1, 1, 2, 2, 2, 2, 1, 1, 1, 0, 1, 4, 3, 4, 1, 1, 1},
     {0.4424432662865273, 6.423686385180859}, 53.7109626593635},
    {"ADD1M", true, {20}, false, 1.0,
     {2, 5, 0, 0, 0, 1, 0, 2, 2, 1, 2, 2, 3, 3, 2, 2, 1, 2, 2, 1, 9, 1, 1, 2, 2, 2, 2, 2, 1, 2, 2, 1, 2, 1, 1, 0, 0, 1, 1, 3, 0, 1, 0, 1, 1, 1, 2, 4, 7, 5, 5, 3, 2, 3, 2, 2, 3, 1, 1, 1, 2},
     {0.5385437737862464, 0.8162153179746044, 7.8730991580059815}, 78.49050839333218},
    {"ADD2SEP", true, {15, 30}, true, 1.0,
     {2, 2, 1, 2, 2, 2, 0, 3, 5, 4, 3, 3, 3, 3, 1, 9, 1, 2, 1, 2, 2, 0, 1, 3, 4, 3, 3, 0, 0, 3, 8, 0, 4, 2, 2, 3, 3, 3, 4, 5, 4, 2, 1, 0, 0, 1, 1, 2, 3, 3, 3, 2, 1, 3, 1, 0, 1, 3, 4, 3, 2},
     {0.507736459328875, 7.801287263652629, 6.397615814431692}, 82.7275641030297},
    {"ADD2SEPM", true, {15, 30}, false, 1.0,
     {2, 5, 4, 4, 4, 4, 6, 4, 3, 3, 2, 4, 2, 3, 7, 15, 2, 2, 2, 1, 2, 2, 1, 1, 2, 4, 1, 1, 0, 2, 7, 2, 2, 1, 3, 3, 4, 1, 1, 2, 3, 1, 2, 1, 2, 3, 4, 4, 1, 4, 4, 5, 5, 3, 0, 1, 3, 1, 0, 1, 2},
     {0.45153440194158184, 1.3999716354451446, 10.986616090766848, 4.861940718836701}, 108.87357917781115},
    {"ADD2ADJ", true, {20, 21}, true, 1.0,
     {2, 2, 3, 1, 1, 1, 3, 3, 4, 5, 4, 3, 3, 3, 5, 5, 2, 0, 0, 0, 10, 6, 1, 1, 3, 10, 5, 4, 1, 0, 2, 1, 1, 5, 5, 2, 4, 3, 3, 1, 2, 3, 3, 2, 1, 3, 3, 3, 4, 1, 4, 0, 0, 1, 1, 0, 1, 2, 4, 2, 0},
     {0.5280075967934037, 9.165813836136556, 4.87358021233373}, 161.50562849998477},
    {"ADD2ADJM", true, {20, 21}, false, 1.0,
     {2, 3, 4, 4, 3, 2, 2, 3, 4, 3, 4, 2, 3, 2, 3, 2, 3, 2, 2, 1, 9, 6, 1, 0, 2, 3, 1, 5, 5, 4, 5, 3, 0, 1, 3, 2, 1, 1, 2, 2, 2, 2, 1, 2, 3, 1, 1, 1, 3, 2, 2, 3, 2, 3, 2, 3, 2, 2, 1, 2, 2},
     {0.4152031828064503, 1.346757458359538, 7.4115190701021385, 4.4115190638892825}, 62.75903912892698},
    {"INN1", false, {20}, true, 1.0,
     {2, 2, 2, 1, 1, 1, 3, 2, 2, 1, 2, 3, 3, 1, 3, 0, 0, 0, 0, 1, 8, 7, 2, 2, 1, 1, 4, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 1, 0, 0, 1, 3, 2, 2, 2, 4, 2, 3, 3, 4, 2, 2, 4, 3, 1, 2, 3},
     {0.42201834862385323, 6.577981651376147}, 79.76146788990827},
    {"INN1M", false, {20}, false, 1.0,
     {2, 3, 4, 3, 1, 3, 1, 1, 1, 0, 1, 0, 0, 2, 3, 5, 4, 2, 0, 0, 9, 5, 2, 1, 2, 1, 3, 5, 6, 6, 4, 3, 1, 2, 2, 1, 2, 1, 1, 2, 1, 1, 0, 1, 1, 2, 0, 1, 2, 2, 2, 3, 1, 1, 2, 2, 1, 1, 2, 1, 1},
     {0.5672127911567308, 0.7254243979470977, 8.274575602052908}, 72.13945913936041},
    {"INN2", false, {15, 30}, true, 1.0,
     {2, 2, 2, 3, 2, 0, 0, 0, 1, 1, 2, 6, 7, 5, 3, 9, 3, 7, 7, 5, 3, 3, 1, 3, 4, 2, 4, 1, 1, 1, 7, 5, 3, 1, 2, 3, 3, 2, 0, 2, 2, 3, 2, 0, 0, 0, 1, 2, 2, 2, 3, 0, 1, 2, 3, 4, 3, 3, 1, 2, 0},
     {0.5223642172523961, 6.432907348242814, 5.477635782747604}, 117.18690095846642},
    {"INN2M", false, {15, 30}, false, 1.0,
     {2, 1, 1, 2, 2, 2, 1, 0, 2, 1, 1, 1, 0, 0, 1, 8, 3, 2, 0, 1, 2, 2, 2, 3, 1, 2, 2, 1, 4, 3, 7, 6, 2, 1, 2, 0, 2, 2, 2, 2, 4, 3, 3, 2, 2, 1, 0, 0, 2, 0, 0, 2, 4, 1, 2, 0, 2, 2, 1, 2, 1},
     {0.33293669734806597, 1.0352213238654269, 6.6318419787865075, 4.965968584090375}, 65.04212279866731},
  };
  return cases;
}

}  // namespace oracle
