#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Core>

namespace capdual {

/// Exact arbitrary-precision integer scalar. All chain-level arithmetic in
/// this library is exact; no floating point appears anywhere in the math.
using Int = mpz_class;
/// Exact rational scalar (level values, barycentric positions, rank oracles).
using Rat = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatZ = Matrix<Int>;
using VecZ = Vector<Int>;
using MatQ = Matrix<Rat>;
using VecQ = Vector<Rat>;
using Index = Eigen::Index;

/// Coefficient rings supported by the pipeline.
enum class Ring { Integers, Mod2 };

inline const char* ring_name(Ring r) { return r == Ring::Integers ? "Z" : "Z2"; }

enum class ErrorCode {
    MixedDimension,
    DegenerateSimplex,
    NotClosed,
    NotConnected,
    NotOrientable,
    DegreeOutOfRange,
    DegreeMismatch,
    RingMismatch,
    NotACocycle,
    NotACycle,
    NotASurface,
    NotAThreeManifold,
    NotRegularValue,
    FaceMatchingFailure,
    UnknownName,
    FileMissing,
    ChecksumMismatch,
    ParseError,
    UsageError,
    InternalError,
};

const char* error_code_name(ErrorCode code);

/// All recoverable failures are reported through this exception type; the
/// code is stable and used by the CLI to map failures to exit status 2.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
    if (!cond) fail(code, message);
}

}  // namespace capdual

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50,
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100,
    };
};

}  // namespace Eigen
