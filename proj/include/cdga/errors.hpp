#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdga {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int column_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + std::move(msg)),
          line(line_), column(column_) {}
};

struct ValidationError : Error {
    std::vector<std::string> problems;
    explicit ValidationError(std::vector<std::string> problems_)
        : Error(problems_.empty() ? std::string("invalid presentation")
                                  : "invalid presentation: " + problems_.front()),
          problems(std::move(problems_)) {}
};

struct DegreeBoundError : Error {
    using Error::Error;
};

struct TableMismatchError : Error {
    using Error::Error;
};

struct NotACocycleError : Error {
    using Error::Error;
};

struct NotACoboundaryError : Error {
    using Error::Error;
};

// per-stage generator counts of a model: (generator degree, stage) -> count.
// stage 0 entries come from x generators, stage j >= 1 from the j-th pass of
// the y phase that targets degree (generator degree)+1.
struct InvariantTable {
    std::map<std::pair<int, int>, long> v;

    long value(int i, int j) const {
        auto it = v.find({i, j});
        return it == v.end() ? 0 : it->second;
    }
    void add(int i, int j, long count) {
        if (count != 0) v[{i, j}] += count;
    }
    bool operator==(const InvariantTable&) const = default;
};

struct IterationLimitError : Error {
    int target_degree;     // degree whose kernel could not be exhausted
    int generator_degree;  // degree of the y generators being added
    InvariantTable partial;
    IterationLimitError(int target_degree_, InvariantTable partial_)
        : Error("could not cover all relations in max iterations in degree " +
                std::to_string(target_degree_)),
          target_degree(target_degree_),
          generator_degree(target_degree_ - 1),
          partial(std::move(partial_)) {}
};

}  // namespace cdga
