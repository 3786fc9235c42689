// Copyright 2026 The qeu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Respondent choice data for the two pairwise questions f1 vs f2 and f3 vs f4.
//
// CSV layout (UTF-8, comma separated, no quoting):
//   respondent_id,choice12,choice34
//   r001,f2,f4

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qeu/error.hpp"
#include "qeu/seut.hpp"
#include "qeu/significance.hpp"

namespace qeu::data {

using seut::EllsbergAct;

struct ChoiceRecord {
    std::string respondent_id;
    EllsbergAct choice12; // F1 or F2
    EllsbergAct choice34; // F3 or F4

    friend bool operator==(const ChoiceRecord&, const ChoiceRecord&) = default;
};

class ChoiceDataset {
public:
    explicit ChoiceDataset(std::vector<ChoiceRecord> records) : records_(std::move(records)) {
        if (records_.empty()) {
            throw Error(ErrorCode::EmptyDataset, "dataset has no records");
        }
        std::set<std::string> ids;
        for (const auto& r : records_) {
            if (r.choice12 != EllsbergAct::F1 && r.choice12 != EllsbergAct::F2) {
                throw Error(ErrorCode::MalformedInput, "choice12 must be f1 or f2");
            }
            if (r.choice34 != EllsbergAct::F3 && r.choice34 != EllsbergAct::F4) {
                throw Error(ErrorCode::MalformedInput, "choice34 must be f3 or f4");
            }
            if (!ids.insert(r.respondent_id).second) {
                throw Error(ErrorCode::DuplicateRespondent, "duplicate id " + r.respondent_id);
            }
        }
    }

    [[nodiscard]] const std::vector<ChoiceRecord>& records() const noexcept { return records_; }
    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }

private:
    std::vector<ChoiceRecord> records_;
};

/// Joint choice counts: (f1,f3), (f1,f4), (f2,f3), (f2,f4).
struct CellCounts {
    std::uint64_t f1_f3 = 0;
    std::uint64_t f1_f4 = 0;
    std::uint64_t f2_f3 = 0;
    std::uint64_t f2_f4 = 0;

    [[nodiscard]] std::uint64_t total() const { return f1_f3 + f1_f4 + f2_f3 + f2_f4; }

    friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

/// Exact non-negative rational in lowest terms.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Fraction of(std::uint64_t num, std::uint64_t den) {
        if (den == 0) {
            throw Error(ErrorCode::InvalidArgument, "zero denominator");
        }
        const std::uint64_t g = std::gcd(num, den);
        return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
    }

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct SummaryRates {
    std::uint64_t n = 0;
    CellCounts cells;
    Fraction rate12;            // chose f2
    Fraction rate34;            // chose f4
    Fraction inversion_rate;    // (f1,f4) or (f2,f3), as literally defined
    Fraction consistent_rate;   // (f1,f3) or (f2,f4)
    double p12 = 1.0;           // two-sided exact binomial against 1/2
    double p34 = 1.0;

    friend bool operator==(const SummaryRates&, const SummaryRates&) = default;
};

inline EllsbergAct parse_act(const std::string& token) {
    for (EllsbergAct a : seut::kEllsbergActs) {
        if (token == seut::to_string(a)) {
            return a;
        }
    }
    throw Error(ErrorCode::MalformedInput, "unknown act token '" + token + "'");
}

inline constexpr const char* kCsvHeader = "respondent_id,choice12,choice34";

/// Parses CSV text. `source` names the input in error messages.
inline ChoiceDataset parse_csv(std::istream& in, const std::string& source = "<input>") {
    std::string line;
    std::size_t line_no = 0;
    const auto fail = [&](ErrorCode code, const std::string& what) {
        throw Error(code, source + ":" + std::to_string(line_no) + ": " + what);
    };
    const auto chomp = [](std::string& s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
            s.pop_back();
        }
    };

    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
            line.erase(0, 3);
        }
        if (line.empty()) {
            continue;
        }
        if (line != kCsvHeader) {
            fail(ErrorCode::MalformedInput, std::string("expected header '") + kCsvHeader + "'");
        }
        have_header = true;
    }
    if (!have_header) {
        throw Error(ErrorCode::EmptyDataset, source + ": empty file");
    }

    std::vector<ChoiceRecord> records;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        if (fields.size() != 3) {
            fail(ErrorCode::MalformedInput, "expected 3 fields, got " + std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            fail(ErrorCode::MalformedInput, "empty respondent_id");
        }
        ChoiceRecord rec{fields[0], EllsbergAct::F1, EllsbergAct::F3};
        try {
            rec.choice12 = parse_act(fields[1]);
            rec.choice34 = parse_act(fields[2]);
        } catch (const Error& e) {
            fail(ErrorCode::MalformedInput, e.what());
        }
        if (rec.choice12 != EllsbergAct::F1 && rec.choice12 != EllsbergAct::F2) {
            fail(ErrorCode::MalformedInput, "choice12 must be f1 or f2, got " + fields[1]);
        }
        if (rec.choice34 != EllsbergAct::F3 && rec.choice34 != EllsbergAct::F4) {
            fail(ErrorCode::MalformedInput, "choice34 must be f3 or f4, got " + fields[2]);
        }
        if (!ids.insert(rec.respondent_id).second) {
            fail(ErrorCode::DuplicateRespondent, "duplicate respondent_id " + rec.respondent_id);
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) {
        throw Error(ErrorCode::EmptyDataset, source + ": no records");
    }
    return ChoiceDataset(std::move(records));
}

inline ChoiceDataset ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    }
    return parse_csv(in, path);
}

inline void write_csv(const ChoiceDataset& d, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : d.records()) {
        out << r.respondent_id << ',' << seut::to_string(r.choice12) << ','
            << seut::to_string(r.choice34) << '\n';
    }
}

/// Dataset with the given joint counts, respondents numbered r001, r002, ...
inline ChoiceDataset synthesize(const CellCounts& cells) {
    std::vector<ChoiceRecord> records;
    std::size_t next = 1;
    const auto add = [&](std::uint64_t count, EllsbergAct a, EllsbergAct b) {
        for (std::uint64_t i = 0; i < count; ++i) {
            std::string id = std::to_string(next++);
            id.insert(0, id.size() < 3 ? 3 - id.size() : 0, '0');
            records.push_back({"r" + id, a, b});
        }
    };
    add(cells.f1_f3, EllsbergAct::F1, EllsbergAct::F3);
    add(cells.f1_f4, EllsbergAct::F1, EllsbergAct::F4);
    add(cells.f2_f3, EllsbergAct::F2, EllsbergAct::F3);
    add(cells.f2_f4, EllsbergAct::F2, EllsbergAct::F4);
    return ChoiceDataset(std::move(records));
}

inline CellCounts count_cells(const ChoiceDataset& d) {
    CellCounts c;
    for (const auto& r : d.records()) {
        const bool f1 = r.choice12 == EllsbergAct::F1;
        const bool f3 = r.choice34 == EllsbergAct::F3;
        if (f1 && f3) {
            ++c.f1_f3;
        } else if (f1) {
            ++c.f1_f4;
        } else if (f3) {
            ++c.f2_f3;
        } else {
            ++c.f2_f4;
        }
    }
    return c;
}

inline SummaryRates summarize(const ChoiceDataset& d) {
    SummaryRates s;
    s.cells = count_cells(d);
    s.n = s.cells.total();
    const std::uint64_t chose_f2 = s.cells.f2_f3 + s.cells.f2_f4;
    const std::uint64_t chose_f4 = s.cells.f1_f4 + s.cells.f2_f4;
    s.rate12 = Fraction::of(chose_f2, s.n);
    s.rate34 = Fraction::of(chose_f4, s.n);
    s.inversion_rate = Fraction::of(s.cells.f1_f4 + s.cells.f2_f3, s.n);
    s.consistent_rate = Fraction::of(s.cells.f1_f3 + s.cells.f2_f4, s.n);
    s.p12 = stats::binomial_two_sided(chose_f2, s.n, 0.5);
    s.p34 = stats::binomial_two_sided(chose_f4, s.n, 0.5);
    return s;
}

} // namespace qeu::data
