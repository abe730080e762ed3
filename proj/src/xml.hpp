#pragma once

// Minimal XML reader covering the GraphML subset this library emits:
// prolog, comments, elements with attributes, character data with the five
// predefined entities. Tracks line/column for error reporting.

#include <string>
#include <utility>
#include <vector>

namespace cpsva::detail {

struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlNode> children;
    std::string text;  // concatenated character data of this element
    int line = 0;
    int col = 0;

    const std::string* attribute(const std::string& key) const;
};

/// Parses a document and returns its root element.
/// Throws cpsva::GraphmlError on malformed input.
XmlNode xml_parse(const std::string& document);

std::string xml_escape(const std::string& text);

}  // namespace cpsva::detail
