#include "inar/estimate.hpp"

#include "inar/cls_baseline.hpp"
#include "inar/cls_innovational.hpp"

namespace inar {

EstimateReport estimate(const Series& y, const std::optional<OutlierScenario>& sc,
                        std::optional<double> mu, Method method) {
    if (!sc) return estimate_clean(y, mu);
    if (sc->family == Family::Additive) return estimate_additive(y, *sc, mu, method);
    return estimate_innovational(y, *sc, mu);
}

AsymptoticLaw conditional_law(double alpha, double mu, const ModelSpec& model,
                              const Series& y, const OutlierScenario& sc) {
    if (sc.family == Family::Additive) return additive_conditional_law(alpha, mu, model, y, sc);
    return innovational_conditional_law(alpha, mu, model, y, sc);
}

}  // namespace inar
