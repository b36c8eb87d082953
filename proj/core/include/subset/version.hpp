#ifndef SUBSET_VERSION_HPP
#define SUBSET_VERSION_HPP

namespace subset {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subset

#endif  // SUBSET_VERSION_HPP
