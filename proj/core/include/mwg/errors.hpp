#pragma once

#include <stdexcept>
#include <string>

namespace mwg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix construction.
struct NotSquare : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };

// Graph construction.
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct BadVertexId : Error { using Error::Error; };
struct WeightDimMismatch : Error { using Error::Error; };

// Path search.
struct NotAPath : Error { using Error::Error; };
struct PathBudgetExceeded : Error { using Error::Error; };

// I/O and generation.
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };

}  // namespace mwg
