#include "format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cli {

OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format \"" + std::string(s) +
                                "\" (expected text, json or csv)");
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

namespace {

bool is_primitive(const Doc& v) {
    return v.is_string() || v.is_boolean() || v.is_number() || v.is_null();
}

std::string primitive_str(const Doc& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "-";
    return v.dump();
}

// rows of objects sharing one key set render as a table
bool is_table(const Doc& v) {
    return v.is_array() && !v.empty() &&
           std::all_of(v.begin(), v.end(), [](const Doc& e) { return e.is_object(); });
}

std::string tuple_str(const Doc& arr) {
    std::string out = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += primitive_str(arr[i]);
    }
    return out + ")";
}

std::string inline_list(const Doc& arr, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].is_array() ? tuple_str(arr[i]) : primitive_str(arr[i]);
    }
    return out;
}

std::string cell_str(const Doc& v) {
    if (is_primitive(v)) return primitive_str(v);
    if (v.is_array()) return v.empty() ? "-" : inline_list(v, " ");
    return v.dump();
}

void text_table(std::ostringstream& out, const Doc& rows, int indent) {
    std::vector<std::string> cols;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            row.push_back(r.contains(cols[c]) ? cell_str(r.at(cols[c])) : "-");
            width[c] = std::max(width[c], row.back().size());
        }
        body.push_back(std::move(row));
    }
    std::string pad(static_cast<std::size_t>(indent), ' ');
    auto emit = [&](const std::vector<std::string>& row) {
        out << pad;
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(cols);
    for (const auto& row : body) emit(row);
}

void text_value(std::ostringstream& out, const std::string& key, const Doc& v, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_primitive(v)) {
        out << pad << key << ": " << primitive_str(v) << "\n";
    } else if (v.is_object()) {
        out << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            text_value(out, it.key(), it.value(), indent + 2);
    } else if (is_table(v)) {
        out << pad << key << ":\n";
        text_table(out, v, indent + 2);
    } else if (v.empty()) {
        out << pad << key << ": -\n";
    } else {
        std::string line = inline_list(v, ", ");
        if (static_cast<std::size_t>(indent) + key.size() + line.size() > 96) {
            out << pad << key << ":\n";
            for (const auto& e : v)
                out << pad << "  - " << (e.is_array() ? tuple_str(e) : primitive_str(e)) << "\n";
        } else {
            out << pad << key << ": " << line << "\n";
        }
    }
}

std::string render_text(const Doc& doc) {
    std::ostringstream out;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "schema" || it.key() == "command") continue;
        text_value(out, it.key(), it.value(), 0);
    }
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// cells hold no objects: scalars stay as-is, flat arrays join with '|',
// arrays of tuples join the tuple with ':' ("1:6:3|1:7:1")
std::string csv_cell(const Doc& v) {
    std::string s;
    if (is_primitive(v)) {
        s = primitive_str(v);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += "|";
            if (v[i].is_array()) {
                for (std::size_t j = 0; j < v[i].size(); ++j) {
                    if (j) s += ":";
                    s += primitive_str(v[i][j]);
                }
            } else {
                s += primitive_str(v[i]);
            }
        }
    } else {
        s = v.dump();
    }
    return csv_escape(s);
}

void csv_walk(const Doc& obj, const std::string& prefix, std::ostringstream& scalars,
              std::vector<std::pair<std::string, const Doc*>>& tables) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const Doc& v = it.value();
        if (v.is_object())
            csv_walk(v, key, scalars, tables);
        else if (is_table(v))
            tables.emplace_back(key, &v);
        else
            scalars << csv_escape(key) << "," << csv_cell(v) << "\n";
    }
}

std::string render_csv(const Doc& doc) {
    std::ostringstream scalars;
    std::vector<std::pair<std::string, const Doc*>> tables;
    csv_walk(doc, "", scalars, tables);
    std::ostringstream out;
    out << "field,value\n" << scalars.str();
    for (const auto& [key, rows] : tables) {
        out << "\n" << csv_escape(key) << "\n";
        std::string header;
        for (auto it = (*rows)[0].begin(); it != (*rows)[0].end(); ++it) {
            if (!header.empty()) header += ",";
            header += csv_escape(it.key());
        }
        out << header << "\n";
        for (const auto& r : *rows) {
            std::string line;
            for (auto it = (*rows)[0].begin(); it != (*rows)[0].end(); ++it) {
                if (!line.empty()) line += ",";
                line += r.contains(it.key()) ? csv_cell(r.at(it.key())) : "";
            }
            out << line << "\n";
        }
    }
    return out.str();
}

}  // namespace

std::string render(const Doc& doc, OutputFormat f, std::string_view scalar_key) {
    switch (f) {
        case OutputFormat::Json: return doc.dump(2) + "\n";
        case OutputFormat::Csv: return render_csv(doc);
        case OutputFormat::Text: {
            std::string key(scalar_key);
            if (!key.empty() && doc.contains(key)) {
                std::string out = primitive_str(doc.at(key)) + "\n";
                if (doc.contains("approx_nonauthoritative"))
                    out += "approx_nonauthoritative: " +
                           primitive_str(doc.at("approx_nonauthoritative")) + "\n";
                return out;
            }
            return render_text(doc);
        }
    }
    throw std::logic_error("unhandled output format");
}

}  // namespace cli
