#include "litrev/pdf_text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include <zlib.h>

#include "litrev/errors.hpp"

namespace litrev {

namespace {

std::optional<std::string> zlib_inflate(std::string_view in) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) return std::nullopt;
    std::string out;
    out.resize(std::max<size_t>(in.size() * 4, 4096));
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    int ret = Z_OK;
    while (true) {
        if (zs.total_out >= out.size()) out.resize(out.size() * 2);
        zs.next_out = reinterpret_cast<Bytef*>(out.data()) + zs.total_out;
        zs.avail_out = static_cast<uInt>(out.size() - zs.total_out);
        ret = inflate(&zs, Z_NO_FLUSH);
        if (ret == Z_STREAM_END) break;
        if (ret != Z_OK) {
            inflateEnd(&zs);
            return std::nullopt;
        }
        if (zs.avail_in == 0) break; // truncated stream; keep what decoded
    }
    out.resize(zs.total_out);
    inflateEnd(&zs);
    return out;
}

// Literal string per the PDF syntax: balanced parens, backslash escapes,
// 1-3 digit octal codes. `i` points at '(' on entry, past ')' on exit.
std::string parse_literal_string(std::string_view s, size_t& i) {
    std::string out;
    int depth = 1;
    ++i;
    while (i < s.size() && depth > 0) {
        char c = s[i];
        if (c == '\\' && i + 1 < s.size()) {
            char e = s[i + 1];
            i += 2;
            switch (e) {
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case 't': out.push_back('\t'); break;
            case 'b': out.push_back('\b'); break;
            case 'f': out.push_back('\f'); break;
            case '(': out.push_back('('); break;
            case ')': out.push_back(')'); break;
            case '\\': out.push_back('\\'); break;
            case '\r':
                if (i < s.size() && s[i] == '\n') ++i;
                break;
            case '\n': break; // line continuation
            default:
                if (e >= '0' && e <= '7') {
                    int code = e - '0';
                    for (int k = 0; k < 2 && i < s.size() && s[i] >= '0' && s[i] <= '7'; ++k) {
                        code = code * 8 + (s[i] - '0');
                        ++i;
                    }
                    out.push_back(static_cast<char>(code & 0xff));
                } else {
                    out.push_back(e);
                }
            }
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') {
            --depth;
            if (depth == 0) {
                ++i;
                break;
            }
        }
        out.push_back(c);
        ++i;
    }
    return out;
}

// Hex string <...>; 2-byte CID codes come out as raw bytes, so NULs are
// dropped rather than decoded.
std::string parse_hex_string(std::string_view s, size_t& i) {
    ++i; // '<'
    std::string hex;
    while (i < s.size() && s[i] != '>') {
        if (std::isxdigit(static_cast<unsigned char>(s[i]))) hex.push_back(s[i]);
        ++i;
    }
    if (i < s.size()) ++i; // '>'
    if (hex.size() % 2 == 1) hex.push_back('0');
    std::string out;
    for (size_t k = 0; k + 1 < hex.size() || (hex.size() >= 2 && k + 1 == hex.size() - 1);
         k += 2) {
        if (k + 1 >= hex.size()) break;
        int hi = std::isdigit(static_cast<unsigned char>(hex[k])) ? hex[k] - '0'
                                                                  : std::tolower(hex[k]) - 'a' + 10;
        int lo = std::isdigit(static_cast<unsigned char>(hex[k + 1]))
                     ? hex[k + 1] - '0'
                     : std::tolower(hex[k + 1]) - 'a' + 10;
        char byte = static_cast<char>((hi << 4) | lo);
        if (byte != '\0') out.push_back(byte);
    }
    return out;
}

// Pulls shown text out of one decoded content stream.
void scan_content_stream(std::string_view s, std::string& out) {
    std::vector<std::string> array_items;
    bool in_array = false;
    std::string last_string;
    std::string number;

    auto emit = [&out](const std::string& text) {
        out += text;
        out.push_back(' ');
    };

    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '%') {
            while (i < s.size() && s[i] != '\n' && s[i] != '\r') ++i;
        } else if (c == '(') {
            std::string str = parse_literal_string(s, i);
            if (in_array) {
                array_items.push_back(std::move(str));
            } else {
                last_string = std::move(str);
            }
        } else if (c == '<') {
            if (i + 1 < s.size() && s[i + 1] == '<') {
                i += 2; // dictionary; its tokens are inert here
            } else {
                std::string str = parse_hex_string(s, i);
                if (in_array) {
                    array_items.push_back(std::move(str));
                } else {
                    last_string = std::move(str);
                }
            }
        } else if (c == '[') {
            in_array = true;
            array_items.clear();
            ++i;
        } else if (c == ']') {
            in_array = false;
            ++i;
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            number.clear();
            while (i < s.size() &&
                   (s[i] == '-' || s[i] == '.' || std::isdigit(static_cast<unsigned char>(s[i])))) {
                number.push_back(s[i]);
                ++i;
            }
            // A large negative kerning inside a TJ array separates words.
            if (in_array && number.size() > 1 && number[0] == '-') {
                try {
                    if (std::stod(number) < -100.0) array_items.push_back(" ");
                } catch (...) {
                }
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '\'' || c == '"') {
            size_t start = i;
            while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) ||
                                    s[i] == '*' || s[i] == '\'' || s[i] == '"')) {
                ++i;
            }
            std::string_view op = s.substr(start, i - start);
            if (op == "Tj" || op == "'" || op == "\"") {
                emit(last_string);
                last_string.clear();
            } else if (op == "TJ") {
                std::string joined;
                for (const auto& item : array_items) joined += item;
                emit(joined);
                array_items.clear();
            } else if (op == "Td" || op == "TD" || op == "T*" || op == "ET") {
                if (!out.empty() && out.back() != '\n') out.push_back('\n');
            }
        } else {
            ++i;
        }
    }
}

} // namespace

std::string BuiltinPdfExtractor::extract(std::string_view pdf) {
    if (pdf.empty()) {
        throw ExtractionFailed("empty input");
    }
    if (pdf.substr(0, std::min<size_t>(pdf.size(), 1024)).find("%PDF-") == std::string_view::npos) {
        throw ExtractionFailed("missing %PDF header");
    }
    size_t tail_start = pdf.size() > 2048 ? pdf.size() - 2048 : 0;
    if (pdf.substr(tail_start).find("/Encrypt") != std::string_view::npos) {
        throw ExtractionFailed("document is encrypted");
    }

    std::string text;
    size_t pos = 0;
    while ((pos = pdf.find("stream", pos)) != std::string_view::npos) {
        // "endstream" also contains "stream"; require a delimiter before.
        if (pos > 0 && std::isalpha(static_cast<unsigned char>(pdf[pos - 1]))) {
            pos += 6;
            continue;
        }
        size_t data_start = pos + 6;
        if (data_start < pdf.size() && pdf[data_start] == '\r') ++data_start;
        if (data_start < pdf.size() && pdf[data_start] == '\n') ++data_start;
        size_t end = pdf.find("endstream", data_start);
        if (end == std::string_view::npos) break;

        // The stream's dictionary sits between the owning "obj" and "stream".
        size_t dict_start = pdf.rfind("obj", pos);
        if (dict_start == std::string_view::npos || pos - dict_start > 4096) {
            dict_start = pos > 600 ? pos - 600 : 0;
        }
        std::string_view dict = pdf.substr(dict_start, pos - dict_start);
        std::string_view raw = pdf.substr(data_start, end - data_start);

        std::string decoded;
        if (dict.find("/FlateDecode") != std::string_view::npos) {
            if (auto inflated = zlib_inflate(raw)) {
                decoded = std::move(*inflated);
            }
        } else if (dict.find("/Filter") != std::string_view::npos) {
            // unsupported filter (DCT, LZW, ...)
        } else {
            decoded.assign(raw);
        }
        if (decoded.find("BT") != std::string::npos) {
            scan_content_stream(decoded, text);
        }
        pos = end + 9;
    }

    // Trim the trailing separator noise the scanner leaves behind.
    while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) text.pop_back();
    return text;
}

std::string extract_text(std::string_view pdf_bytes) {
    BuiltinPdfExtractor extractor;
    return extractor.extract(pdf_bytes);
}

} // namespace litrev
