#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eca/errors.hpp"

namespace eca {

// Fixed 17-significant-digit formatting so emitted numbers round-trip
// bit-exactly through text.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes content to a temporary file in the target directory, then renames
// it over the destination.
inline void atomic_write(const std::filesystem::path& path,
                         const std::string& content) {
    const std::filesystem::path dir =
        path.has_parent_path() ? path.parent_path()
                               : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("atomic_write: cannot open " + tmp.string());
        out << content;
        if (!out) throw Error("atomic_write: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// Minimal CSV builder: header row, LF line endings, '.' decimal separator.
class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << format_double(values[i]);
        }
        out_ << '\n';
    }

    void raw_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

// Tiny JSON emitter with insertion order preserved and numbers printed at
// 17 significant digits.  Only the shapes used by the CLI are supported.
class JsonObject {
public:
    JsonObject& field(const std::string& key, double value) {
        items_.push_back("\"" + key + "\": " + format_double(value));
        return *this;
    }
    JsonObject& field(const std::string& key, long value) {
        items_.push_back("\"" + key + "\": " + std::to_string(value));
        return *this;
    }
    JsonObject& field(const std::string& key, int value) {
        return field(key, static_cast<long>(value));
    }
    JsonObject& field(const std::string& key, bool value) {
        items_.push_back("\"" + key + "\": " + (value ? "true" : "false"));
        return *this;
    }
    JsonObject& field(const std::string& key, const std::string& value) {
        items_.push_back("\"" + key + "\": " + quote(value));
        return *this;
    }
    JsonObject& field_raw(const std::string& key, const std::string& json) {
        items_.push_back("\"" + key + "\": " + json);
        return *this;
    }

    std::string str(int indent = 0) const {
        const std::string pad(static_cast<std::size_t>(indent), ' ');
        const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
        std::string out = "{\n";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            out += inner + items_[i];
            if (i + 1 < items_.size()) out += ',';
            out += '\n';
        }
        out += pad + "}";
        return out;
    }

    static std::string quote(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default: out += c;
            }
        }
        out += '"';
        return out;
    }

    static std::string array(const std::vector<std::string>& elements,
                             int indent = 0) {
        const std::string pad(static_cast<std::size_t>(indent), ' ');
        std::string out = "[\n";
        for (std::size_t i = 0; i < elements.size(); ++i) {
            out += pad + "  " + elements[i];
            if (i + 1 < elements.size()) out += ',';
            out += '\n';
        }
        out += pad + "]";
        return out;
    }

private:
    std::vector<std::string> items_;
};

// Evaluates fn(i) for i in [0, count) on a small worker pool; results are
// reduced in index order, so the output is independent of scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(
                                     std::thread::hardware_concurrency(),
                                     count));
    if (workers <= 1 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        }));
    }
    for (auto& t : tasks) t.get();
    return out;
}

} // namespace eca
