#pragma once

#include <stdexcept>
#include <string>

namespace qhilb {

// Root of every error raised by the library. The CLI maps subclasses to exit
// codes: InputError -> 1, DegreeOverflow -> 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

// quiver-core
class ParseError : public InputError { public: using InputError::InputError; };
class CycleError : public InputError { public: using InputError::InputError; };
class DisconnectedError : public InputError { public: using InputError::InputError; };
class DuplicateArrowName : public InputError { public: using InputError::InputError; };
class NotDynkin : public InputError { public: using InputError::InputError; };

// matrix-series
class SizeMismatch : public InputError { public: using InputError::InputError; };
class NonInvertibleConstantTerm : public InputError { public: using InputError::InputError; };
class AdamsDegreeNotPositive : public InputError { public: using InputError::InputError; };
class NonzeroConstantTerm : public InputError { public: using InputError::InputError; };

// formulas / presentations
class NotRegular : public InputError { public: using InputError::InputError; };
class NotSincere : public InputError { public: using InputError::InputError; };
class MissingWeight : public InputError { public: using InputError::InputError; };
class InvalidFieldElement : public InputError { public: using InputError::InputError; };
class InhomogeneousRelation : public InputError { public: using InputError::InputError; };
class NotAPermutationResidue : public Error { public: using Error::Error; };

// Monomial count in one degree exceeded the configured cap.
class DegreeOverflow : public Error { public: using Error::Error; };

}  // namespace qhilb
