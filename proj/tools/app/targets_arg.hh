#ifndef PMRAMSEY_APP_TARGETS_ARG_HH
#define PMRAMSEY_APP_TARGETS_ARG_HH

#include <string>
#include <vector>

namespace pmramsey::app {

/// "5,5,5", "6*10", "6*2,3*4". Throws InvalidInput.
auto parse_targets(const std::string &text) -> std::vector<int>;

} // namespace pmramsey::app

#endif
