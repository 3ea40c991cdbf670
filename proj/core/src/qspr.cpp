#include "chemtree/qspr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "chemtree/encoding.hpp"
#include "chemtree/errors.hpp"

namespace chemtree {

int RegressionModel::ActiveTerms::count() const {
    return int(wio_cuberoot) + int(s2) + int(m2) + int(n1) + int(n2) + int(n3) + int(n4);
}

RegressionModel RegressionModel::basic() {
    RegressionModel m;
    m.b0 = 35.245;
    m.b1 = 12.233;
    m.b2 = 9.170;
    m.b3 = 1.486;
    m.c = DegreeCostVector{0.0, 9.514, 9.380, 0.0};
    m.active = ActiveTerms{true, true, true, false, true, true, false};
    return m;
}

RegressionModel RegressionModel::regression1() {
    RegressionModel m;
    m.b0 = 50.626;
    m.b1 = 0.0;
    m.b2 = 11.295;
    m.b3 = 1.000;
    m.c = DegreeCostVector{0.0, 14.534, 20.172, 17.015};
    m.active = ActiveTerms{false, true, true, false, true, true, true};
    return m;
}

RegressionModel RegressionModel::regression2() {
    RegressionModel m;
    m.b0 = 44.134;
    m.b1 = 3.851;
    m.b2 = 10.980;
    m.b3 = 0.0;
    m.c = DegreeCostVector{0.0, 17.727, 29.673, 36.470};
    m.active = ActiveTerms{true, true, false, false, true, true, true};
    return m;
}

RegressionModel RegressionModel::preset(const std::string& name) {
    if (name == "basic") return basic();
    if (name == "reg1") return regression1();
    if (name == "reg2") return regression2();
    throw PreconditionError("unknown model preset '" + name + "' (basic|reg1|reg2)");
}

void RegressionModel::validate() const {
    auto check = [](bool active_flag, double coeff, const char* which) {
        if (!active_flag && coeff != 0.0)
            throw PreconditionError(std::string("inactive term '") + which +
                                    "' must have coefficient 0");
    };
    check(active.wio_cuberoot, b1, "wio3");
    check(active.s2, b2, "s2");
    check(active.m2, b3, "m2");
    check(active.n1, c.c1, "n1");
    check(active.n2, c.c2, "n2");
    check(active.n3, c.c3, "n3");
    check(active.n4, c.c4, "n4");
}

DescriptorVector descriptors(const PendentRootedTree& tree) {
    if (tree.order() < 3) throw PreconditionError("descriptors need order >= 3");
    DescriptorVector d;
    d.wio = oxygen_distance(tree);
    d.wio_cuberoot = std::cbrt(static_cast<double>(d.wio));
    DegreeCounts counts = degree_counts(tree);
    d.n1 = counts.n1;
    d.n2 = counts.n2;
    d.n3 = counts.n3;
    d.n4 = counts.n4;
    d.s2 = subroot_indicator(tree, 2);
    d.m2 = second_zagreb(tree.tree());
    return d;
}

double predict(const RegressionModel& model, const PendentRootedTree& tree) {
    DescriptorVector d = descriptors(tree);
    double value = model.b0;
    if (model.active.wio_cuberoot) value += model.b1 * d.wio_cuberoot;
    if (model.active.n1) value += model.c.c1 * d.n1;
    if (model.active.n2) value += model.c.c2 * d.n2;
    if (model.active.n3) value += model.c.c3 * d.n3;
    if (model.active.n4) value += model.c.c4 * d.n4;
    if (model.active.s2) value += model.b2 * d.s2;
    if (model.active.m2) value += model.b3 * static_cast<double>(d.m2);
    return value;
}

namespace {

const char* const kTermNames[] = {"wio3", "n1", "n2", "n3", "n4", "s2", "m2"};

std::vector<double> descriptor_row(const DescriptorVector& d,
                                   const RegressionModel::ActiveTerms& active) {
    std::vector<double> row;
    if (active.wio_cuberoot) row.push_back(d.wio_cuberoot);
    if (active.n1) row.push_back(d.n1);
    if (active.n2) row.push_back(d.n2);
    if (active.n3) row.push_back(d.n3);
    if (active.n4) row.push_back(d.n4);
    if (active.s2) row.push_back(d.s2);
    if (active.m2) row.push_back(static_cast<double>(d.m2));
    return row;
}

std::vector<std::string> active_names(const RegressionModel::ActiveTerms& active) {
    std::vector<std::string> names;
    const bool flags[] = {active.wio_cuberoot, active.n1, active.n2, active.n3,
                          active.n4,           active.s2, active.m2};
    for (int i = 0; i < 7; ++i)
        if (flags[i]) names.push_back(kTermNames[i]);
    return names;
}

}  // namespace

RegressionModel fit(const std::vector<DataRecord>& data,
                    const RegressionModel::ActiveTerms& active) {
    const int rows = static_cast<int>(data.size());
    const int active_count = active.count();
    if (rows <= active_count)
        throw PreconditionError("insufficient data: " + std::to_string(rows) + " records for " +
                                std::to_string(active_count) + " active coefficients");

    std::vector<DescriptorVector> descs;
    descs.reserve(rows);
    Eigen::VectorXd y(rows);
    for (int i = 0; i < rows; ++i) {
        descs.push_back(descriptors(parse_rooted_tree(data[i].skeleton)));
        y(i) = data[i].bp_celsius;
    }

    RegressionModel model;
    model.active = active;

    bool constant = true;
    for (int i = 1; i < rows; ++i)
        if (y(i) != y(0)) constant = false;
    if (constant) {
        // Degenerate observations: intercept carries everything.
        model.b0 = y(0);
        return model;
    }

    const int cols = active_count + 1;
    Eigen::MatrixXd design(rows, cols);
    for (int i = 0; i < rows; ++i) {
        design(i, 0) = 1.0;
        std::vector<double> row = descriptor_row(descs[i], active);
        for (int j = 0; j < active_count; ++j) design(i, j + 1) = row[j];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < cols) {
        std::vector<std::string> names = active_names(active);
        names.insert(names.begin(), "intercept");
        std::string offending;
        const auto& perm = qr.colsPermutation().indices();
        for (int j = qr.rank(); j < cols; ++j) {
            if (!offending.empty()) offending += ",";
            offending += names[perm(j)];
        }
        throw PreconditionError("design matrix is rank deficient (dependent columns: " +
                                offending + ")");
    }
    Eigen::VectorXd beta = qr.solve(y);

    model.b0 = beta(0);
    int j = 1;
    if (active.wio_cuberoot) model.b1 = beta(j++);
    if (active.n1) model.c.c1 = beta(j++);
    if (active.n2) model.c.c2 = beta(j++);
    if (active.n3) model.c.c3 = beta(j++);
    if (active.n4) model.c.c4 = beta(j++);
    if (active.s2) model.b2 = beta(j++);
    if (active.m2) model.b3 = beta(j++);
    return model;
}

PrecisionStats precision(const RegressionModel& model, const std::vector<DataRecord>& data) {
    const int n = static_cast<int>(data.size());
    if (n < 2) throw PreconditionError("precision needs at least 2 records");
    std::vector<double> pred(n), obs(n);
    for (int i = 0; i < n; ++i) {
        pred[i] = predict(model, parse_rooted_tree(data[i].skeleton));
        obs[i] = data[i].bp_celsius;
    }
    double mean_pred = 0.0, mean_obs = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_pred += pred[i];
        mean_obs += obs[i];
    }
    mean_pred /= n;
    mean_obs /= n;
    double var_pred = 0.0, var_obs = 0.0, cov = 0.0, rss = 0.0;
    for (int i = 0; i < n; ++i) {
        var_pred += (pred[i] - mean_pred) * (pred[i] - mean_pred);
        var_obs += (obs[i] - mean_obs) * (obs[i] - mean_obs);
        cov += (pred[i] - mean_pred) * (obs[i] - mean_obs);
        rss += (pred[i] - obs[i]) * (pred[i] - obs[i]);
    }
    if (var_obs == 0.0) throw PreconditionError("observations have zero variance");
    PrecisionStats stats;
    stats.correlation = var_pred == 0.0 ? 0.0 : cov / std::sqrt(var_pred * var_obs);
    stats.sd = std::sqrt(rss / (n - 1));
    return stats;
}

namespace {

struct CsvField {
    std::string text;
    std::size_t column = 0;  // 1-based column of the field start
};

// RFC-4180-style line split: unquoted fields may not contain commas,
// quoted fields escape '"' by doubling it.
std::vector<CsvField> split_csv_line(const std::string& line, int line_number,
                                     std::size_t line_offset) {
    std::vector<CsvField> fields;
    std::size_t i = 0;
    while (true) {
        CsvField field;
        field.column = i + 1;
        if (i < line.size() && line[i] == '"') {
            ++i;
            while (true) {
                if (i >= line.size())
                    throw ParseError("line " + std::to_string(line_number) +
                                         ": unterminated quoted field",
                                     line_offset + i);
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.text += '"';
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    field.text += line[i++];
                }
            }
            if (i < line.size() && line[i] != ',')
                throw ParseError("line " + std::to_string(line_number) +
                                     ": expected ',' after quoted field",
                                 line_offset + i);
        } else {
            while (i < line.size() && line[i] != ',') field.text += line[i++];
        }
        fields.push_back(std::move(field));
        if (i >= line.size()) break;
        ++i;  // skip comma
    }
    return fields;
}

std::string csv_quote(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

DatasetLoadResult load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open dataset file '" + path + "'");
    DatasetLoadResult result;
    std::string line;
    int line_number = 0;
    std::size_t offset = 0;
    std::map<std::string, int> first_seen;  // canonical skeleton -> line
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_number;
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_checked) {
            if (line != "name,skeleton,bp_celsius")
                throw ParseError("line 1: expected header 'name,skeleton,bp_celsius'",
                                 line_offset);
            header_checked = true;
            continue;
        }
        std::vector<CsvField> fields = split_csv_line(line, line_number, line_offset);
        if (fields.size() != 3)
            throw ParseError("line " + std::to_string(line_number) + ": expected 3 fields, got " +
                                 std::to_string(fields.size()),
                             line_offset);
        DataRecord record;
        record.name = fields[0].text;
        record.skeleton = fields[1].text;
        PendentRootedTree tree = [&] {
            try {
                return parse_rooted_tree(record.skeleton);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_number) + ", column " +
                                     std::to_string(fields[1].column) +
                                     ": bad skeleton: " + e.what(),
                                 line_offset + fields[1].column - 1 + e.position());
            } catch (const PreconditionError& e) {
                throw ParseError("line " + std::to_string(line_number) + ", column " +
                                     std::to_string(fields[1].column) +
                                     ": bad skeleton: " + e.what(),
                                 line_offset + fields[1].column - 1);
            }
        }();
        if (tree.order() < 3)
            throw ParseError("line " + std::to_string(line_number) +
                                 ": skeleton must have order >= 3",
                             line_offset + fields[1].column - 1);
        try {
            std::size_t used = 0;
            record.bp_celsius = std::stod(fields[2].text, &used);
            if (used != fields[2].text.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_number) + ", column " +
                                 std::to_string(fields[2].column) + ": bad boiling point '" +
                                 fields[2].text + "'",
                             line_offset + fields[2].column - 1);
        }
        std::string canon = canonical_form(tree);
        auto [it, inserted] = first_seen.emplace(canon, line_number);
        if (!inserted) {
            result.warnings.push_back("duplicate skeleton '" + record.skeleton + "' at line " +
                                      std::to_string(line_number) + " (first at line " +
                                      std::to_string(it->second) + "); keeping both");
        }
        result.records.push_back(std::move(record));
    }
    if (!header_checked) throw ParseError("empty dataset file", 0);
    return result;
}

void save_dataset(const std::string& path, const std::vector<DataRecord>& records) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write dataset file '" + path + "'");
    out << "name,skeleton,bp_celsius\n";
    std::ostringstream number;
    for (const DataRecord& r : records) {
        number.str("");
        number << r.bp_celsius;
        out << csv_quote(r.name) << ',' << csv_quote(r.skeleton) << ',' << number.str() << '\n';
    }
}

std::string model_to_json(const RegressionModel& model) {
    model.validate();
    nlohmann::ordered_json doc;
    doc["b0"] = model.b0;
    doc["b1"] = model.b1;
    doc["b2"] = model.b2;
    doc["b3"] = model.b3;
    doc["c"] = {model.c.c1, model.c.c2, model.c.c3, model.c.c4};
    doc["active"] = active_names(model.active);
    return doc.dump();
}

RegressionModel model_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what(),
                         e.byte > 0 ? e.byte - 1 : 0);
    }
    RegressionModel model;
    try {
        model.b0 = doc.at("b0").get<double>();
        model.b1 = doc.at("b1").get<double>();
        model.b2 = doc.at("b2").get<double>();
        model.b3 = doc.at("b3").get<double>();
        const auto& c = doc.at("c");
        if (!c.is_array() || c.size() != 4)
            throw ParseError("model JSON: \"c\" must be an array of 4 numbers", 0);
        model.c = DegreeCostVector{c[0].get<double>(), c[1].get<double>(), c[2].get<double>(),
                                   c[3].get<double>()};
        for (const auto& term : doc.at("active")) {
            std::string name = term.get<std::string>();
            if (name == "wio3") model.active.wio_cuberoot = true;
            else if (name == "n1") model.active.n1 = true;
            else if (name == "n2") model.active.n2 = true;
            else if (name == "n3") model.active.n3 = true;
            else if (name == "n4") model.active.n4 = true;
            else if (name == "s2") model.active.s2 = true;
            else if (name == "m2") model.active.m2 = true;
            else throw ParseError("model JSON: unknown active term '" + name + "'", 0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what(), 0);
    }
    model.validate();
    return model;
}

}  // namespace chemtree
