#pragma once

// Reference values for the first and second moments (n = 2..5) and for the
// leading coefficient J^λ (n = 1..9). Entries are in the machine text
// grammar and are compared after parsing to canonical form, never as text.
// Only one partition of each conjugate pair is listed for J^λ.

#include <string_view>

namespace immoments::golden {

struct MomentRow {
  std::string_view lambda;
  std::string_view mean;
  std::string_view fourth;
};

inline constexpr MomentRow kMomentTable[] = {
    {"2", "2/(d*(d+1))", "4*(3*d^2-d+2)/(d^2*(d^2-1)*(d+2)*(d+3))"},
    {"3", "6/(d*(d+1)*(d+2))", "144*(d^2+d+4)/(d^2*(d^2-1)*(d+2)*(d+3)*(d+4)*(d+5))"},
    {"2,1", "6/(d*(d^2-1))", "36*(5*d^3-3*d^2-8*d+12)/(d^2*(d^2-1)^2*(d^2-4)*(d+3))"},
    {"4", "24/(d*(d+1)*(d+2)*(d+3))",
     "576*(5*d^4+30*d^3+127*d^2+294*d+264)/(d^2*(d^2-1)*(d+1)*(d+2)^2*(d+3)*(d+4)*(d+5)*(d+6)*(d+7))"},
    {"3,1", "24/(d*(d^2-1)*(d+2))",
     "48*(73*d^5+27*d^4-585*d^3-421*d^2+742*d-1240)/(d^2*(d^2-1)^2*(d^2-4)*(d+2)*(d^2-9)*(d+4)*(d+5))"},
    {"2,2", "24/(d^2*(d^2-1))", "144*(19*d^4-112*d^3+239*d^2-224*d+132)/(d^2*(d^2-1)^2*(d^2-4)^2*(d^2-9))"},
    {"2,1^2", "24/(d*(d^2-1)*(d-2))", "48*(73*d^3-170*d^2-151*d+542)/(2*d^2*(d^2-1)^2*(d-2)*(d^2-4)*(d^2-9))"},
    {"5", "120/(d*(d+1)*(d+2)*(d+3)*(d+4))",
     "28800*(3*d^4+26*d^3+173*d^2+598*d+880)/(d^2*(d^2-1)*(d+1)*(d+2)^2*(d+3)*(d+4)*(d+5)*(d+6)*(d+7)*(d+8)*(d+9))"},
    {"4,1", "120/(d*(d^2-1)*(d+2)*(d+3))",
     "960*(100*d^6+581*d^5+611*d^4-3373*d^3-9643*d^2-7304*d-12204)/(d^2*(d^2-1)*(d^2-4)*(d^2-9)*(d+1)*(d+2)*(d+3)*(d+4)*(d+5)*(d+6)*(d+7))"},
    {"3,2", "120/(d^2*(d^2-1)*(d+2))",
     "240*(394*d^6-367*d^5-3331*d^4+7568*d^3-10747*d^2+17575*d+1428)/(d^3*(d^2-1)^2*(d^2-4)^2*(d^2-9)*(d+3)*(d+4)*(d+5))"},
    {"3,1^2", "120/(d*(d^2-1)*(d^2-4))",
     "240*(418*d^5-813*d^4-5424*d^3+7276*d^2+18977*d-35968)/(d^2*(d^2-1)^2*(d^2-4)^2*(d^2-9)*(d^2-16)*(d+5))"},
    {"2^2,1", "120/(d^2*(d^2-1)*(d-2))",
     "240*(394*d^5-3725*d^4+12404*d^3-15268*d^2+609*d+9540)/(d^3*(d^2-1)^2*(d^2-4)^2*(d^2-9)*(d-3)*(d-4))"},
    {"2,1^3", "120/(d*(d^2-1)*(d-2)*(d-3))",
     "960*(100*d^3-433*d^2-47*d+1638)/(d^2*(d^2-1)^2*(d^2-4)*(d-2)*(d^2-9)*(d-3)*(d-4))"},
};

struct LeadingRow {
  std::string_view lambda;
  std::string_view value;
};

inline constexpr LeadingRow kLeadingTable[] = {
    {"1", "2"},
    {"2", "12"},
    {"3", "144"},
    {"2,1", "180"},
    {"4", "2880"},
    {"3,1", "3504"},
    {"2,2", "2736"},
    {"5", "86400"},
    {"4,1", "96000"},
    {"3,2", "94560"},
    {"3,1^2", "100320"},
    {"6", "3628800"},
    {"5,1", "3772800"},
    {"4,2", "4013280"},
    {"4,1^2", "3754080"},
    {"3^2", "2895840"},
    {"3,2,1", "7128000"},
    {"7", "203212800"},
    {"6,1", "200793600"},
    {"5,2", "205309440"},
    {"5,1^2", "189987840"},
    {"4,3", "184917600"},
    {"4,2,1", "407090880"},
    {"4,1^3", "185401440"},
    {"3^2,1", "190411200"},
    {"8", "14631321600"},
    {"7,1", "13886208000"},
    {"6,2", "13501071360"},
    {"6,1^2", "12628869120"},
    {"5,3", "13266247680"},
    {"5,2,1", "25358135040"},
    {"5,1^3", "11890851840"},
    {"4^2", "9760020480"},
    {"4,3,1", "24651244800"},
    {"4,2^2", "13852258560"},
    {"4,2,1^2", "29371910400"},
    {"3^2,2", "12037536000"},
    {"9", "1316818944000"},
    {"8,1", "1209522585600"},
    {"7,2", "1123058442240"},
    {"7,1^2", "1065369231360"},
    {"6,3", "1107173007360"},
    {"6,2,1", "1949153310720"},
    {"6,1^3", "973714452480"},
    {"5,4", "985895608320"},
    {"5,3,1", "2449895777280"},
    {"5,2^2", "1120506670080"},
    {"5,2,1^2", "2257223915520"},
    {"5,1^4", "943313817600"},
    {"4^2,1", "983657364480"},
    {"4,3,2", "2002024200960"},
    {"4,3,1^2", "2379988396800"},
    {"3^3", "765174574080"},
};

}  // namespace immoments::golden
