#pragma once

#include <iosfwd>
#include <string>

#include "angelesco/numerics.hpp"

namespace angelesco::cli {

/// Exit-code contract: 0 pass, 1 verification failure, 2 configuration
/// error, 3 precision failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitPrecisionError = 3;

enum class Format { csv, json };

struct CoeffsConfig {
    std::string family;  // type1-diagonal | type1-above | type1-below |
                         // type2-diagonal | type2-above | p-kernel | jacobi-kernel
    int r = 1;
    std::string beta = "0";
    long n = 0;
    int k = 1;
    std::string alpha = "100";  // jacobi-kernel only
    int precision_digits = kDefaultPrecision;
    Format format = Format::csv;
    std::string command_line;
};

struct VerifyConfig {
    std::string check;  // orthogonality | recurrence | ode-type1 | ode-type2 |
                        // rodrigues | lowering-raising | limit | w-equation
    int r = 1;
    std::string beta = "0";
    long n = 0;
    int precision_digits = kDefaultPrecision;
    std::string command_line;
};

struct DensityConfig {
    std::string type;  // typeI | typeII-ray
    int r = 1;
    long grid = 512;
    int precision_digits = kDefaultPrecision;
    std::string command_line;
};

struct ZerosConfig {
    std::string family;  // p-kernel | type2
    int r = 1;
    std::string beta = "0";
    long n = 1;
    bool rescale = false;
    bool ks = false;
    int precision_digits = kDefaultPrecision;
    std::string command_line;
};

/// Round-trip-safe decimal rendering at the run precision; '.' decimal
/// separator, no grouping.
std::string format_real(const Real& x);

int run_coeffs(const CoeffsConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int run_density(const DensityConfig& cfg, std::ostream& out, std::ostream& err);
int run_zeros(const ZerosConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace angelesco::cli
