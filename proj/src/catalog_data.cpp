#include "catalog_data.hpp"

// Transcribed displays, one term per line in the text format of VermaModule::parse.
// x5*^<n+k> is filled in with the family parameter.

namespace e510::catalog_data {

// d12 d13 d14 d15 times the following, in M(0,0,0,1)
const char* const kW11Body = R"(
- p2 d23 d24 d25 d35 d45 | x5*
- p2 d23 d24 d25 d34 d45 | x4*
- p2 d23 d24 d25 d34 d35 | x3*
+ p3 d23 d25 d34 d35 d45 | x5*
+ p3 d23 d24 d34 d35 d45 | x4*
+ p3 d23 d24 d25 d34 d35 | x2*
+ p4 d24 d25 d34 d35 d45 | x5*
- p4 d23 d24 d34 d35 d45 | x3*
+ p4 d23 d24 d25 d34 d45 | x2*
- p5 d24 d25 d34 d35 d45 | x4*
- p5 d23 d25 d34 d35 d45 | x3*
+ p5 d23 d24 d25 d35 d45 | x2*
- p1 p2 d23 d24 d25 | x2*
+ p2^2 d23 d24 d25 | x1*
+ p1 p3 d23 d25 d34 | x2*
- p2 p3 d23 d25 d34 | x1*
+ p1 p4 d24 d25 d34 | x2*
- p2 p4 d24 d25 d34 | x1*
- p1 p3 d23 d24 d35 | x2*
+ p2 p3 d23 d24 d35 | x1*
+ p1 p5 d24 d25 d35 | x2*
- p2 p5 d24 d25 d35 | x1*
- p1 p3 d23 d34 d35 | x3*
+ p3^2 d23 d34 d35 | x1*
- p1 p4 d24 d34 d35 | x3*
+ p3 p4 d24 d34 d35 | x1*
- p1 p5 d25 d34 d35 | x3*
+ p3 p5 d25 d34 d35 | x1*
- p1 p4 d23 d24 d45 | x2*
+ p2 p4 d23 d24 d45 | x1*
- p1 p5 d23 d25 d45 | x2*
+ p2 p5 d23 d25 d45 | x1*
- p1 p3 d23 d34 d45 | x4*
+ p3 p4 d23 d34 d45 | x1*
- p1 p4 d24 d34 d45 | x4*
+ p4^2 d24 d34 d45 | x1*
- p1 p5 d25 d34 d45 | x4*
+ p4 p5 d25 d34 d45 | x1*
- p1 p3 d23 d35 d45 | x5*
+ p3 p5 d23 d35 d45 | x1*
- p1 p4 d24 d35 d45 | x5*
+ p4 p5 d24 d35 d45 | x1*
- p1 p5 d25 d35 d45 | x5*
+ p5^2 d25 d35 d45 | x1*
- p1^2 p3 d23 | x2*
+ p1 p2 p3 d23 | x1*
- p1^2 p4 d24 | x2*
+ p1 p2 p4 d24 | x1*
- p1^2 p5 d25 | x2*
+ p1 p2 p5 d25 | x1*
)";

// d12 d13 d14 d15 times the following, in M(0,0,0,2)
const char* const kW7Body = R"(
d23 d24 d25 | x2*^2
- d23 d25 d34 | x2* x3*
- d24 d25 d34 | x2* x4*
+ d23 d24 d35 | x2* x3*
- d24 d25 d35 | x2* x5*
+ d23 d34 d35 | x3*^2
+ d24 d34 d35 | x3* x4*
+ d25 d34 d35 | x3* x5*
+ d23 d24 d45 | x2* x4*
+ d23 d25 d45 | x2* x5*
+ d23 d34 d45 | x3* x4*
+ d24 d34 d45 | x4*^2
+ d25 d34 d45 | x4* x5*
+ d23 d35 d45 | x3* x5*
+ d24 d35 d45 | x4* x5*
+ d25 d35 d45 | x5*^2
+ p1 d23 | x2* x3*
+ p1 d24 | x2* x4*
+ p1 d25 | x2* x5*
- p2 d23 | x1* x3*
- p2 d24 | x1* x4*
- p2 d25 | x1* x5*
+ p3 d23 | x1* x2*
- p3 d34 | x1* x4*
- p3 d35 | x1* x5*
+ p4 d24 | x1* x2*
+ p4 d34 | x1* x3*
- p4 d45 | x1* x5*
+ p5 d25 | x1* x2*
+ p5 d35 | x1* x3*
+ p5 d45 | x1* x4*
)";

// M(0,0,0,n+3), weight (0,0,0,n)
const char* const kW4ETemplate = R"(
d12 d13 d14 d15 | x1*^3 x5*^<n>
+ d12 d14 d15 d23 | x1*^2 x2* x5*^<n>
+ d13 d14 d15 d23 | x1*^2 x3* x5*^<n>
- d12 d13 d15 d24 | x1*^2 x2* x5*^<n>
+ d13 d14 d15 d24 | x1*^2 x4* x5*^<n>
+ d12 d15 d23 d24 | x1* x2*^2 x5*^<n>
+ d13 d15 d23 d24 | x1* x2* x3* x5*^<n>
+ d14 d15 d23 d24 | x1* x2* x4* x5*^<n>
+ d12 d13 d14 d25 | x1*^2 x2* x5*^<n>
+ d13 d14 d15 d25 | x1*^2 x5*^<n+1>
- d12 d14 d23 d25 | x1* x2*^2 x5*^<n>
- d13 d14 d23 d25 | x1* x2* x3* x5*^<n>
+ d14 d15 d23 d25 | x1* x2* x5*^<n+1>
+ d12 d13 d24 d25 | x1* x2*^2 x5*^<n>
- d13 d14 d24 d25 | x1* x2* x4* x5*^<n>
- d13 d15 d24 d25 | x1* x2* x5*^<n+1>
+ d12 d23 d24 d25 | x2*^3 x5*^<n>
+ d13 d23 d24 d25 | x2*^2 x3* x5*^<n>
+ d14 d23 d24 d25 | x2*^2 x4* x5*^<n>
+ d15 d23 d24 d25 | x2*^2 x5*^<n+1>
- d12 d13 d15 d34 | x1*^2 x3* x5*^<n>
- d12 d14 d15 d34 | x1*^2 x4* x5*^<n>
+ d12 d15 d23 d34 | x1* x2* x3* x5*^<n>
+ d13 d15 d23 d34 | x1* x3*^2 x5*^<n>
+ d14 d15 d23 d34 | x1* x3* x4* x5*^<n>
+ d12 d15 d24 d34 | x1* x2* x4* x5*^<n>
+ d13 d15 d24 d34 | x1* x3* x4* x5*^<n>
+ d14 d15 d24 d34 | x1* x4*^2 x5*^<n>
- d12 d13 d25 d34 | x1* x2* x3* x5*^<n>
- d12 d14 d25 d34 | x1* x2* x4* x5*^<n>
+ d13 d15 d25 d34 | x1* x3* x5*^<n+1>
+ d14 d15 d25 d34 | x1* x4* x5*^<n+1>
- d12 d23 d25 d34 | x2*^2 x3* x5*^<n>
- d13 d23 d25 d34 | x2* x3*^2 x5*^<n>
- d14 d23 d25 d34 | x2* x3* x4* x5*^<n>
- d15 d23 d25 d34 | x2* x3* x5*^<n+1>
- d12 d24 d25 d34 | x2*^2 x4* x5*^<n>
- d13 d24 d25 d34 | x2* x3* x4* x5*^<n>
- d14 d24 d25 d34 | x2* x4*^2 x5*^<n>
- d15 d24 d25 d34 | x2* x4* x5*^<n+1>
+ d12 d13 d14 d35 | x1*^2 x3* x5*^<n>
- d12 d14 d15 d35 | x1*^2 x5*^<n+1>
- d12 d14 d23 d35 | x1* x2* x3* x5*^<n>
- d13 d14 d23 d35 | x1* x3*^2 x5*^<n>
+ d14 d15 d23 d35 | x1* x3* x5*^<n+1>
+ d12 d13 d24 d35 | x1* x2* x3* x5*^<n>
- d13 d14 d24 d35 | x1* x3* x4* x5*^<n>
+ d12 d15 d24 d35 | x1* x2* x5*^<n+1>
+ d14 d15 d24 d35 | x1* x4* x5*^<n+1>
+ d12 d23 d24 d35 | x2*^2 x3* x5*^<n>
+ d13 d23 d24 d35 | x2* x3*^2 x5*^<n>
+ d14 d23 d24 d35 | x2* x3* x4* x5*^<n>
+ d15 d23 d24 d35 | x2* x3* x5*^<n+1>
- d12 d14 d25 d35 | x1* x2* x5*^<n+1>
- d13 d14 d25 d35 | x1* x3* x5*^<n+1>
+ d14 d15 d25 d35 | x1* x5*^<n+2>
- d12 d24 d25 d35 | x2*^2 x5*^<n+1>
- d13 d24 d25 d35 | x2* x3* x5*^<n+1>
- d14 d24 d25 d35 | x2* x4* x5*^<n+1>
- d15 d24 d25 d35 | x2* x5*^<n+2>
+ d12 d13 d34 d35 | x1* x3*^2 x5*^<n>
+ d12 d14 d34 d35 | x1* x3* x4* x5*^<n>
+ d12 d15 d34 d35 | x1* x3* x5*^<n+1>
+ d12 d23 d34 d35 | x2* x3*^2 x5*^<n>
+ d13 d23 d34 d35 | x3*^3 x5*^<n>
+ d14 d23 d34 d35 | x3*^2 x4* x5*^<n>
+ d15 d23 d34 d35 | x3*^2 x5*^<n+1>
+ d12 d24 d34 d35 | x2* x3* x4* x5*^<n>
+ d13 d24 d34 d35 | x3*^2 x4* x5*^<n>
+ d14 d24 d34 d35 | x3* x4*^2 x5*^<n>
+ d15 d24 d34 d35 | x3* x4* x5*^<n+1>
+ d12 d25 d34 d35 | x2* x3* x5*^<n+1>
+ d13 d25 d34 d35 | x3*^2 x5*^<n+1>
+ d14 d25 d34 d35 | x3* x4* x5*^<n+1>
+ d15 d25 d34 d35 | x3* x5*^<n+2>
+ d12 d13 d14 d45 | x1*^2 x4* x5*^<n>
+ d12 d13 d15 d45 | x1*^2 x5*^<n+1>
- d12 d14 d23 d45 | x1* x2* x4* x5*^<n>
- d13 d14 d23 d45 | x1* x3* x4* x5*^<n>
- d12 d15 d23 d45 | x1* x2* x5*^<n+1>
- d13 d15 d23 d45 | x1* x3* x5*^<n+1>
+ d12 d13 d24 d45 | x1* x2* x4* x5*^<n>
- d13 d14 d24 d45 | x1* x4*^2 x5*^<n>
- d13 d15 d24 d45 | x1* x4* x5*^<n+1>
+ d12 d23 d24 d45 | x2*^2 x4* x5*^<n>
+ d13 d23 d24 d45 | x2* x3* x4* x5*^<n>
+ d14 d23 d24 d45 | x2* x4*^2 x5*^<n>
+ d15 d23 d24 d45 | x2* x4* x5*^<n+1>
+ d12 d13 d25 d45 | x1* x2* x5*^<n+1>
- d13 d14 d25 d45 | x1* x4* x5*^<n+1>
- d13 d15 d25 d45 | x1* x5*^<n+2>
+ d12 d23 d25 d45 | x2*^2 x5*^<n+1>
+ d13 d23 d25 d45 | x2* x3* x5*^<n+1>
+ d14 d23 d25 d45 | x2* x4* x5*^<n+1>
+ d15 d23 d25 d45 | x2* x5*^<n+2>
+ d12 d13 d34 d45 | x1* x3* x4* x5*^<n>
+ d12 d14 d34 d45 | x1* x4*^2 x5*^<n>
+ d12 d15 d34 d45 | x1* x4* x5*^<n+1>
+ d12 d23 d34 d45 | x2* x3* x4* x5*^<n>
+ d13 d23 d34 d45 | x3*^2 x4* x5*^<n>
+ d14 d23 d34 d45 | x3* x4*^2 x5*^<n>
+ d15 d23 d34 d45 | x3* x4* x5*^<n+1>
+ d12 d24 d34 d45 | x2* x4*^2 x5*^<n>
+ d13 d24 d34 d45 | x3* x4*^2 x5*^<n>
+ d14 d24 d34 d45 | x4*^3 x5*^<n>
+ d15 d24 d34 d45 | x4*^2 x5*^<n+1>
+ d12 d25 d34 d45 | x2* x4* x5*^<n+1>
+ d13 d25 d34 d45 | x3* x4* x5*^<n+1>
+ d14 d25 d34 d45 | x4*^2 x5*^<n+1>
+ d15 d25 d34 d45 | x4* x5*^<n+2>
+ d12 d13 d35 d45 | x1* x3* x5*^<n+1>
+ d12 d14 d35 d45 | x1* x4* x5*^<n+1>
+ d12 d15 d35 d45 | x1* x5*^<n+2>
+ d12 d23 d35 d45 | x2* x3* x5*^<n+1>
+ d13 d23 d35 d45 | x3*^2 x5*^<n+1>
+ d14 d23 d35 d45 | x3* x4* x5*^<n+1>
+ d15 d23 d35 d45 | x3* x5*^<n+2>
+ d12 d24 d35 d45 | x2* x4* x5*^<n+1>
+ d13 d24 d35 d45 | x3* x4* x5*^<n+1>
+ d14 d24 d35 d45 | x4*^2 x5*^<n+1>
+ d15 d24 d35 d45 | x4* x5*^<n+2>
+ d12 d25 d35 d45 | x2* x5*^<n+2>
+ d13 d25 d35 d45 | x3* x5*^<n+2>
+ d14 d25 d35 d45 | x4* x5*^<n+2>
+ d15 d25 d35 d45 | x5*^<n+3>
+ p1 d12 d13 | x1* x2* x3* x5*^<n>
+ p1 d12 d14 | x1* x2* x4* x5*^<n>
+ p1 d12 d15 | x1* x2* x5*^<n+1>
+ p1 d12 d23 | x2*^2 x3* x5*^<n>
+ p1 d13 d23 | x2* x3*^2 x5*^<n>
+ p1 d14 d23 | x2* x3* x4* x5*^<n>
+ p1 d15 d23 | x2* x3* x5*^<n+1>
+ p1 d12 d24 | x2*^2 x4* x5*^<n>
+ p1 d13 d24 | x2* x3* x4* x5*^<n>
+ p1 d14 d24 | x2* x4*^2 x5*^<n>
+ p1 d15 d24 | x2* x4* x5*^<n+1>
+ p1 d12 d25 | x2*^2 x5*^<n+1>
+ p1 d13 d25 | x2* x3* x5*^<n+1>
+ p1 d14 d25 | x2* x4* x5*^<n+1>
+ p1 d15 d25 | x2* x5*^<n+2>
- p2 d12 d13 | x1*^2 x3* x5*^<n>
- p2 d12 d14 | x1*^2 x4* x5*^<n>
- p2 d12 d15 | x1*^2 x5*^<n+1>
- p2 d12 d23 | x1* x2* x3* x5*^<n>
- p2 d13 d23 | x1* x3*^2 x5*^<n>
- p2 d14 d23 | x1* x3* x4* x5*^<n>
- p2 d15 d23 | x1* x3* x5*^<n+1>
- p2 d12 d24 | x1* x2* x4* x5*^<n>
- p2 d13 d24 | x1* x3* x4* x5*^<n>
- p2 d14 d24 | x1* x4*^2 x5*^<n>
- p2 d15 d24 | x1* x4* x5*^<n+1>
- p2 d12 d25 | x1* x2* x5*^<n+1>
- p2 d13 d25 | x1* x3* x5*^<n+1>
- p2 d14 d25 | x1* x4* x5*^<n+1>
- p2 d15 d25 | x1* x5*^<n+2>
+ p3 d12 d13 | x1*^2 x2* x5*^<n>
- p3 d13 d14 | x1*^2 x4* x5*^<n>
- p3 d13 d15 | x1*^2 x5*^<n+1>
+ p3 d12 d23 | x1* x2*^2 x5*^<n>
+ p3 d13 d23 | x1* x2* x3* x5*^<n>
+ p3 d14 d23 | x1* x2* x4* x5*^<n>
+ p3 d15 d23 | x1* x2* x5*^<n+1>
- p3 d12 d34 | x1* x2* x4* x5*^<n>
- p3 d13 d34 | x1* x3* x4* x5*^<n>
- p3 d14 d34 | x1* x4*^2 x5*^<n>
- p3 d15 d34 | x1* x4* x5*^<n+1>
- p3 d12 d35 | x1* x2* x5*^<n+1>
- p3 d13 d35 | x1* x3* x5*^<n+1>
- p3 d14 d35 | x1* x4* x5*^<n+1>
- p3 d15 d35 | x1* x5*^<n+2>
+ p4 d12 d14 | x1*^2 x2* x5*^<n>
+ p4 d13 d14 | x1*^2 x3* x5*^<n>
- p4 d14 d15 | x1*^2 x5*^<n+1>
+ p4 d12 d24 | x1* x2*^2 x5*^<n>
+ p4 d13 d24 | x1* x2* x3* x5*^<n>
+ p4 d14 d24 | x1* x2* x4* x5*^<n>
+ p4 d15 d24 | x1* x2* x5*^<n+1>
+ p4 d12 d34 | x1* x2* x3* x5*^<n>
+ p4 d13 d34 | x1* x3*^2 x5*^<n>
+ p4 d14 d34 | x1* x3* x4* x5*^<n>
+ p4 d15 d34 | x1* x3* x5*^<n+1>
- p4 d12 d45 | x1* x2* x5*^<n+1>
- p4 d13 d45 | x1* x3* x5*^<n+1>
- p4 d14 d45 | x1* x4* x5*^<n+1>
- p4 d15 d45 | x1* x5*^<n+2>
+ p5 d12 d15 | x1*^2 x2* x5*^<n>
+ p5 d13 d15 | x1*^2 x3* x5*^<n>
+ p5 d14 d15 | x1*^2 x4* x5*^<n>
+ p5 d12 d25 | x1* x2*^2 x5*^<n>
+ p5 d13 d25 | x1* x2* x3* x5*^<n>
+ p5 d14 d25 | x1* x2* x4* x5*^<n>
+ p5 d15 d25 | x1* x2* x5*^<n+1>
+ p5 d12 d35 | x1* x2* x3* x5*^<n>
+ p5 d13 d35 | x1* x3*^2 x5*^<n>
+ p5 d14 d35 | x1* x3* x4* x5*^<n>
+ p5 d15 d35 | x1* x3* x5*^<n+1>
+ p5 d12 d45 | x1* x2* x4* x5*^<n>
+ p5 d13 d45 | x1* x3* x4* x5*^<n>
+ p5 d14 d45 | x1* x4*^2 x5*^<n>
+ p5 d15 d45 | x1* x4* x5*^<n+1>
)";

}  // namespace e510::catalog_data
