#include "xml.hpp"

#include "cpsva/errors.hpp"

namespace cpsva::detail {

const std::string* XmlNode::attribute(const std::string& key) const {
    for (const auto& [k, v] : attributes) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char next() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool consume(const std::string& token) {
        if (text_.compare(pos_, token.size(), token) != 0) return false;
        for (std::size_t i = 0; i < token.size(); ++i) next();
        return true;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                          peek() == '\r')) {
            next();
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw GraphmlError(line_, col_, message);
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
           c == ':';
}

std::string read_name(Cursor& in) {
    std::string out;
    while (!in.eof() && name_char(in.peek())) out.push_back(in.next());
    if (out.empty()) in.fail("expected a name");
    return out;
}

std::string decode_entities(Cursor& in, const std::string& raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '&') {
            out.push_back(raw[i]);
            continue;
        }
        auto end = raw.find(';', i);
        if (end == std::string::npos) in.fail("unterminated entity reference");
        std::string name = raw.substr(i + 1, end - i - 1);
        if (name == "amp") out.push_back('&');
        else if (name == "lt") out.push_back('<');
        else if (name == "gt") out.push_back('>');
        else if (name == "quot") out.push_back('"');
        else if (name == "apos") out.push_back('\'');
        else in.fail("unknown entity reference &" + name + ";");
        i = end;
    }
    return out;
}

void skip_misc(Cursor& in) {
    // Whitespace, comments, prolog, and processing instructions.
    for (;;) {
        in.skip_ws();
        if (in.consume("<!--")) {
            while (!in.eof() && !in.consume("-->")) in.next();
        } else if (in.consume("<?")) {
            while (!in.eof() && !in.consume("?>")) in.next();
        } else {
            return;
        }
    }
}

XmlNode parse_element(Cursor& in) {
    XmlNode node;
    node.line = in.line();
    node.col = in.col();
    if (!in.consume("<")) in.fail("expected '<'");
    node.name = read_name(in);

    for (;;) {
        in.skip_ws();
        if (in.eof()) in.fail("unexpected end of document inside tag");
        if (in.consume("/>")) return node;
        if (in.consume(">")) break;
        std::string key = read_name(in);
        in.skip_ws();
        if (!in.consume("=")) in.fail("expected '=' after attribute name");
        in.skip_ws();
        if (in.eof()) in.fail("unexpected end of document in attribute");
        char quote = in.next();
        if (quote != '"' && quote != '\'') in.fail("expected quoted attribute");
        std::string raw;
        while (!in.eof() && in.peek() != quote) raw.push_back(in.next());
        if (in.eof()) in.fail("unterminated attribute value");
        in.next();  // closing quote
        node.attributes.emplace_back(key, decode_entities(in, raw));
    }

    // Content.
    for (;;) {
        std::string raw;
        while (!in.eof() && in.peek() != '<') raw.push_back(in.next());
        node.text += decode_entities(in, raw);
        if (in.eof()) in.fail("unterminated element <" + node.name + ">");
        if (in.consume("<!--")) {
            while (!in.eof() && !in.consume("-->")) in.next();
            continue;
        }
        if (in.consume("</")) {
            std::string closing = read_name(in);
            if (closing != node.name) {
                in.fail("mismatched closing tag </" + closing + "> for <" +
                        node.name + ">");
            }
            in.skip_ws();
            if (!in.consume(">")) in.fail("expected '>' in closing tag");
            return node;
        }
        node.children.push_back(parse_element(in));
    }
}

}  // namespace

XmlNode xml_parse(const std::string& document) {
    Cursor in(document);
    skip_misc(in);
    if (in.eof()) in.fail("empty document");
    XmlNode root = parse_element(in);
    skip_misc(in);
    if (!in.eof()) in.fail("trailing content after root element");
    return root;
}

}  // namespace cpsva::detail
