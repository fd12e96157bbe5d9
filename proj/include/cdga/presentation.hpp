#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdga/gca.hpp"

namespace cdga {

// parsed input document: a generator list, differential images, relations
struct Presentation {
    TablePtr table;
    std::map<std::string, Element> differentials;  // only nonzero images
    std::vector<Element> relations;
};

// text format:
//   # comment
//   generators: e1:1 e2:1 e7:2
//   differential:
//     e1 = -e1*e6
//   relations:
//     e2^2
// sections after the generator line are optional; indented lines belong to
// the section above them
Presentation parse_presentation(const std::string& text);

// expression grammar: sum of terms, a term is a product of factors, a factor
// is a rational number or a generator with an optional positive power
Element parse_expression(const TablePtr& table, const std::string& src, int line);

// canonical re-renderable form
std::string render_presentation(const Presentation& p);

}  // namespace cdga
