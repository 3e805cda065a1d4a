#pragma once

#include <array>

namespace dwell {

/// The published tunnelling table: a = 1 um, seven barrier half-widths.
struct PublishedRow {
  double b;    // m
  double E0;   // J
  double E1;   // J
  double dE;   // J
  double tau;  // s
};

inline constexpr double kPublishedA = 1e-6;
inline constexpr double kPublishedCaptionK = 2e-20;  // as printed
inline constexpr double kResolvedK = 2e-24;          // reproduces the tabulated energies

inline constexpr std::array<PublishedRow, 7> kPublishedTable{{
    {100e-9, 5.3753895e-26, 5.4382093e-26, 6.3e-28, 1.0e-6},
    {116.65290e-9, 5.3899569e-26, 5.4246062e-26, 3.5e-28, 2.9e-6},
    {136.07900e-9, 5.3987829e-26, 5.4160961e-26, 1.7e-28, 3.8e-6},
    {158.74011e-9, 5.4036276e-26, 5.4113353e-26, 0.77e-28, 8.6e-6},
    {185.17494e-9, 5.4059909e-26, 5.4089897e-26, 0.30e-28, 22.0e-6},
    {216.01195e-9, 5.4069931e-26, 5.4079902e-26, 0.10e-28, 66.0e-6},
    {251.98421e-9, 5.4073539e-26, 5.4076298e-26, 2.7e-30, 240e-6},
}};

/// Row whose printed period disagrees with its own printed gap.
inline constexpr int kInconsistentTauRow = 1;

}  // namespace dwell
