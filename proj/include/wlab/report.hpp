#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wlab/annulus_hopf.hpp"
#include "wlab/checks.hpp"
#include "wlab/moebius.hpp"
#include "wlab/steklov.hpp"

namespace wlab {

// Minimal deterministic JSON builder. Keys keep insertion order and numbers
// are printed with 17 significant digits so reports are byte-stable.
class JsonValue {
public:
    static JsonValue object();
    static JsonValue array();
    static JsonValue number(double v);
    static JsonValue integer(long long v);
    static JsonValue boolean(bool v);
    static JsonValue string(std::string v);
    static JsonValue complexNumber(const Cd& v); // {"re": ..., "im": ...}

    JsonValue& set(const std::string& key, JsonValue v); // object only
    JsonValue& push(JsonValue v);                        // array only

    void write(std::ostream& os) const;
    std::string str() const;

private:
    enum class Kind { Object, Array, Number, Integer, Bool, String };
    Kind kind_ = Kind::Object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> items_;
};

JsonValue toJson(const CheckReport& r);
JsonValue toJson(const HopfFitResult& r);
JsonValue toJson(const ImpossibilityCertificate& c);
JsonValue toJson(const SteklovSpectrum& s);

// {"version": 1, "surface": name, "results": [...]}; surface key omitted when
// the name is empty.
void writeReport(const std::vector<JsonValue>& results, const std::string& surfaceName,
                 std::ostream& os);

void writeSpectrumCsv(const SteklovSpectrum& s, std::ostream& os);

// Wavefront OBJ over a polar grid, nR x nTheta vertices, quads split into
// triangles with the theta seam closed.
void writeMeshObj(const SurfaceChart& surface, const GridSpec& grid, std::ostream& os,
                  double branchClearance = 0.03);

} // namespace wlab
