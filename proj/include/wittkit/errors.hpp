#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct composition_nonzero : error { using error::error; };
struct mixed_length : error { using error::error; };
struct length_bounds : error { using error::error; };
struct not_in_image : error { using error::error; };
struct truncation_overflow : error { using error::error; };
struct not_divisible : error { using error::error; };
struct not_central : error { using error::error; };
struct not_cocycle : error { using error::error; };
struct division_failure : error { using error::error; };
struct no_comparison : error { using error::error; };
struct weight_overflow : error { using error::error; };
struct degree_overflow : error { using error::error; };
struct config_invalid : error { using error::error; };
struct io_failure : error { using error::error; };

}  // namespace wittkit
