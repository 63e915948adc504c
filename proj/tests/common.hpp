#pragma once

#include <string>

#include "pivctr/fuscat.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) {
  return std::string(PIVCTR_DATA_DIR) + "/" + name;
}

inline pivctr::FusionData load(const std::string& name) {
  return pivctr::load_fusion_file(data_path(name + ".json"));
}

inline const char* const kBundled[] = {"vec_z2", "vec_z3", "vec_s3", "vec_z2_omega", "fibonacci", "ising"};

}  // namespace testing_support
