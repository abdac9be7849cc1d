#ifndef LCADAG_ERRORS_HPP
#define LCADAG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcadag {

// Base class for every condition this library reports by throwing.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- graph construction ----

struct CycleDetected : Error {
    std::vector<std::string> cycle;  // labels along one directed cycle, first != last
    CycleDetected(const std::string& msg, std::vector<std::string> c)
        : Error(msg), cycle(std::move(c)) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(const std::string& msg) : Error(msg) {}
};

struct DuplicateEdge : Error {
    explicit DuplicateEdge(const std::string& msg) : Error(msg) {}
};

struct DuplicateLabel : Error {
    explicit DuplicateLabel(const std::string& msg) : Error(msg) {}
};

struct InvalidLabel : Error {
    explicit InvalidLabel(const std::string& msg) : Error(msg) {}
};

struct LastVertex : Error {
    explicit LastVertex(const std::string& msg) : Error(msg) {}
};

// ---- bounded searches ----

struct SizeLimitExceeded : Error {
    explicit SizeLimitExceeded(const std::string& msg) : Error(msg) {}
};

// ---- transforms ----

struct LabelCollision : Error {
    explicit LabelCollision(const std::string& msg) : Error(msg) {}
};

struct NotTreeLeafChild : Error {
    std::string witness;  // inner vertex without a tree-leaf child
    NotTreeLeafChild(const std::string& msg, std::string w)
        : Error(msg), witness(std::move(w)) {}
};

// ---- queries ----

struct EmptyQuery : Error {
    explicit EmptyQuery(const std::string& msg) : Error(msg) {}
};

struct NoLca : Error {
    explicit NoLca(const std::string& msg) : Error(msg) {}
};

struct AmbiguousLca : Error {
    std::vector<std::string> candidates;  // the whole LCA set, by label
    AmbiguousLca(const std::string& msg, std::vector<std::string> c)
        : Error(msg), candidates(std::move(c)) {}
};

struct NoSuperset : Error {
    explicit NoSuperset(const std::string& msg) : Error(msg) {}
};

// ---- construction rule ----

struct NotGlobalLca : Error {
    explicit NotGlobalLca(const std::string& msg) : Error(msg) {}
};

struct OStarViolated : Error {
    std::string witness;  // vertex whose candidate set has no unique minimum
    int step;             // 1-based step number when raised during a replay, else -1
    OStarViolated(const std::string& msg, std::string w, int s = -1)
        : Error(msg), witness(std::move(w)), step(s) {}
};

struct NotHolju : Error {
    std::size_t prefix_size;  // vertex count of the largest valid prefix
    std::string detail;
    NotHolju(const std::string& msg, std::size_t p, std::string d)
        : Error(msg), prefix_size(p), detail(std::move(d)) {}
};

// ---- recognition preconditions ----

struct NotANetwork : Error {
    explicit NotANetwork(const std::string& msg) : Error(msg) {}
};

// ---- reconstruction / parsing ----

struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error(msg) {}
};

struct InconsistentFamily : Error {
    explicit InconsistentFamily(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;  // 1-based input line, 0 when unknown
    ParseError(const std::string& msg, int l = 0) : Error(msg), line(l) {}
};

}  // namespace lcadag

#endif
