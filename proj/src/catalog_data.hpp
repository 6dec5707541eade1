#pragma once

// Published designs, stored as design text exactly as printed (columns of the printed
// arrays are blocks).
namespace rbd::data {

extern const char* const kGammaRC8;
extern const char* const kTheta8;
extern const char* const kDeltaRC8;

}  // namespace rbd::data
