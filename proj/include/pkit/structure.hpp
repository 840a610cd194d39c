#pragma once

#include <optional>
#include <utility>

#include "pkit/grothendieck.hpp"
#include "pkit/weights.hpp"

namespace pkit {

Weight dagger(const Weight& lambda);

struct Sharp {
    Weight weight;
    int m = 0;
};
Sharp sharp(const Weight& lambda);

Weight dual_kac(Family family, const Weight& lambda);

Weight max_solid_slide(const Weight& tau);
Weight max_dashed_slide(const Weight& tau);

Weight cosocle_nabla(const Weight& lambda);
Weight socle_delta(const Weight& lambda);
Weight cosocle_nabla_closed_form(const Weight& lambda);

}  // namespace pkit
