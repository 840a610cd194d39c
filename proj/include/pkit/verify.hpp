#pragma once

#include <string>
#include <vector>

#include "pkit/report.hpp"
#include "pkit/weights.hpp"

namespace pkit {

std::vector<CheckReport> verify_arrows(int n, const Window& window);
std::vector<CheckReport> verify_p0(int n);
std::vector<CheckReport> verify_bgg(int n, const Window& window);
std::vector<CheckReport> verify_proj(int n, const Window& window);
std::vector<CheckReport> verify_duality(int n, const Window& window);
std::vector<CheckReport> verify_socle(int n, const Window& window);
std::vector<CheckReport> verify_blocks(int n, const Window& window);

const std::vector<std::string>& suite_names();  // without "all"
std::vector<CheckReport> run_suite(const std::string& suite, int n, const Window& window);

}  // namespace pkit
