#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct WallError : std::runtime_error {
    explicit WallError(const std::string& what) : std::runtime_error(what) {}
};

struct MultipleWalls : std::runtime_error {
    explicit MultipleWalls(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCell : std::runtime_error {
    explicit DegenerateCell(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct NoStationaryPoint : std::runtime_error {
    explicit NoStationaryPoint(const std::string& what) : std::runtime_error(what) {}
};

struct MultipleStationaryPoints : std::runtime_error {
    explicit MultipleStationaryPoints(const std::string& what) : std::runtime_error(what) {}
};

struct ContourError : std::runtime_error {
    explicit ContourError(const std::string& what) : std::runtime_error(what) {}
};

struct BadIntervals : std::runtime_error {
    explicit BadIntervals(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingEigenvalue : std::runtime_error {
    explicit MissingEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfAsymptoticRange : std::runtime_error {
    explicit OutOfAsymptoticRange(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hk

#endif
