// Copyright 2026 The cultsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published circuit listings, one instruction per line.

#include "cultsim/protocols.h"

namespace cultsim {

namespace {

constexpr const char *kInjection = R"cult(Q(2,2)0
Q(3,1)1
Q(3,2)2
Q(3,3)3
Q(4,1)4
Q(4,2)5
Q(4,3)6
Q(4,4)7
Q(5,1)8
Q(5,2)9
Q(5,3)10
R_1_2_3_6_7_8_5_4_9_10_0
MARKZ(0)5
MARKZ(1)9
POLYGON(0,0,1,0.25)1_8_10_5
POLYGON(0,1,0,0.25)1_5_3_0
POLYGON(1,0,0,0.25)5_10_7_3
TICK
H[injection]_5
TICK
I[injection]_5
TICK
H_0_1_2_4_8_9_10
TICK
CZ_1_4_2_5_8_9
TICK
H_2_3_8
TICK
CZ_2_3
TICK
H_3_5_6
TICK
CZ_1_2_3_6_4_5
TICK
H_2_6
TICK
CZ_2_3_5_6
TICK
H_6
TICK
CZ_0_2_6_10
TICK
H_2_3_4_6_7
TICK
CZ_1_2_3_6
TICK
CZ_2_5_4_8_6_7
TICK
H_4_7_10
TICK
CZ_1_4_2_3_5_6_9_10
TICK
H_1_2_3_6_9_10
TICK
CZ_0_2_4_5_6_7_8_9
TICK
H_2_4_5_6_9
TICK
M_2_4_9_6
MARKZ(1)4
)cult";

constexpr const char *kCultivation = R"cult(Q(2,2)0
Q(3,1)1
Q(3,2)2
Q(3,3)3
Q(4,1)4
Q(4,2)5
Q(4,3)6
Q(4,4)7
Q(5,1)8
Q(5,2)9
Q(5,3)10
Q(6,2)11
R_2_4_6_9
MARKX(0)7_3_0_1_5_10_8
MARKX(1)10_5_1_8
MARKZ(0)2_6_9
POLYGON(0,0,1,0.25)1_8_10_5
POLYGON(0,1,0,0.25)1_5_3_0
POLYGON(1,0,0,0.25)5_10_7_3
TICK
I[T_gate]_0_1_3_5_7_8_10
TICK
H_1_2_4_5_6_7_8_9
TICK
CZ_1_2_4_5_6_7_8_9
TICK
H_0_5_9_10
TICK
CZ_0_2_5_9_6_10
TICK
H_2_3_9_11
TICK
CZ_2_5_3_6_9_11
TICK
H_5_9_11
TICK
CZ_5_6_9_11
TICK
H_6_9
TICK
M[root_measurement]_6_9
MARKZ(0)6
TICK
R_6_9
TICK
H_6_9
TICK
CZ_5_6_9_11
TICK
H_5_9_11
TICK
CZ_2_5_3_6_9_11
TICK
H_2_3_9_11
TICK
CZ_0_2_5_9_6_10
TICK
H_0_5_9_10
TICK
CZ_1_2_4_5_6_7_8_9
TICK
H_1_2_4_5_6_7_8_9
TICK
I[negative_T_gate]_0_1_3_5_7_8_10
TICK
M_2_4_6_9
)cult";

constexpr const char *kFig2Cultivation = R"cult(Q(7,8)0
Q(7,9)1
Q(7,10)2
Q(8,7)3
Q(8,8)4
Q(8,9)5
Q(8,10)6
Q(8,11)7
Q(9,8)8
Q(9,9)9
Q(9,10)10
Q(10,9)11
H_YZ[conjugate]_5
TICK
S[injection]_5
TICK
H_3_0_4_1_2_6_10
H_YZ[conjugate]_5
TICK
I[injection]_5
TICK
CZ_0_1_4_5_2_6
TICK
H_4_8_2
TICK
CZ_4_8
TICK
H_8_5_9
I[echo]_4
TICK
CZ_0_4_8_9_1_5
TICK
H_4_9
TICK
I[echo]_8
TICK
CZ_4_8_5_9
TICK
H_9
I[echo]_4
TICK
CZ_3_4_9_10
TICK
H_4_8_1_9_11
TICK
I[echo]_5
TICK
CZ_0_4_8_9
TICK
I[echo]_1_11
TICK
CZ_4_5_1_2_9_11
TICK
H_1_11_10
I[echo]_4_8_9
TICK
CZ_0_1_4_8_5_9_6_10
TICK
H_0_4_8_9_6_10
I[echo]_1
TICK
CZ_3_4_1_5_9_11_2_6
TICK
H_4_1_5_9_6
TICK
I[echo]_4_9
TICK
I[echo]_8_5_11_2_10_7_3_0
M_4_1_6_9
DT(8,8,0)rec[-4]
DT(7,9,0)rec[-3]
DT(8,10,0)rec[-2]
DT(9,9,0)rec[-1]
TICK
R_4_1_9_6
TICK
I[conjugate]_3_0_8_5_11_2_10
TICK
I[echo]_8_5_11_2_7_3_0_10
TICK
I[T_gate]_3_0_8_5_11_2_10
TICK
I[conjugate]_3_0_8_5_11_2_10
TICK
H_0_4_1_5_9_11_2_6
TICK
CZ_0_4_1_5_9_11_2_6
TICK
H_3_5_6_10
I[echo]_4
TICK
CZ_3_4_5_6_9_10
TICK
H_4_8_6_7
I[echo]_5_9
TICK
CZ_4_5_8_9_6_7
TICK
H_5_6_7
TICK
CZ_5_9_6_7
TICK
H_9_6
TICK
I[echo]_4_8_1_5_11_2_10_7_3_0
M_9_6
DT(9,9,1)rec[-2]
DT(8,10,1)rec[-1]
TICK
R_9_6
TICK
H_9_6
TICK
CZ_5_9_6_7
TICK
H_5_6_7
TICK
CZ_4_5_8_9_6_7
TICK
H_4_8_6_7
I[echo]_5
TICK
CZ_3_4_5_6_9_10
TICK
H_3_5_6_10
TICK
CZ_0_4_1_5_9_11_2_6
TICK
H_0_5_11_2
TICK
I[conjugate]_3_0_8_5_11_2_10
TICK
I[echo]_4_8_1_5_11_6_2_7_3_0_10
TICK
I[T_dagger_gate]_3_0_8_5_11_2_10
TICK
I[conjugate]_3_0_8_5_11_2_10
TICK
H_3_0_4_8_1_5_9_11_2_6_10
TICK
M_4_1_9_6_3_0_8_5_11_2_10_7
DT(8,8,2)rec[-12]
DT(7,9,2)rec[-11]
DT(9,9,2)rec[-10]_rec[-14]
DT(8,10,2)rec[-9]
DT(8,9,2)rec[-5]_rec[-6]_rec[-7]_rec[-8]
DT(9,10,2)rec[-2]_rec[-3]_rec[-5]_rec[-7]
DT(10,9,2)rec[-2]_rec[-4]_rec[-5]_rec[-6]
DT(8,11,2)rec[-1]
OI(0)rec[-2]_rec[-3]_rec[-4]_rec[-5]_rec[-6]_rec[-7]_rec[-8]_rec[-9]_rec[-10]_rec[-12]
)cult";

constexpr const char *kFig3Kickback = R"cult(Q(3,3)0
Q(3,4)1
Q(3,5)2
Q(3,6)3
Q(3,7)4
Q(4,3)5
Q(4,4)6
Q(4,5)7
Q(4,6)8
Q(4,7)9
Q(5,4)10
Q(5,5)11
Q(5,6)12
Q(6,5)13
H_YZ[conjugate]_7
TICK
S[injection]_7
TICK
H_5_1_6_2_3_8_12
H_YZ[conjugate]_7
TICK
I[injection]_7
TICK
CZ_1_2_6_7_3_8
TICK
H_6_10_3
TICK
CZ_6_10
TICK
H_10_7_11
I[echo]_6
TICK
CZ_1_6_10_11_2_7
TICK
H_6_11
TICK
I[echo]_10
TICK
CZ_6_10_7_11
TICK
H_11
I[echo]_6
TICK
CZ_5_6_11_12
TICK
H_6_10_2_11_13
TICK
I[echo]_7
TICK
CZ_1_6_10_11
TICK
I[echo]_2_13
TICK
CZ_6_7_2_3_11_13
TICK
H_2_13_12
I[echo]_6_10_11
TICK
CZ_1_2_6_10_7_11_8_12
TICK
H_1_6_10_11_8_12
I[echo]_2
TICK
CZ_5_6_2_7_11_13_3_8
TICK
H_6_2_7_11_8
TICK
I[echo]_6_11
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_8_11
DT(4,4,0)rec[-4]
DT(3,5,0)rec[-3]
DT(4,6,0)rec[-2]
DT(5,5,0)rec[-1]
TICK
R_6_2_11_8
TICK
H_0_6_2_11_8_4
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
I[echo]_6_2_11
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_12
TICK
I[echo]_3_8
TICK
CZ_6_10_2_7_11_13_3_8
TICK
I[echo]_6_2_11
TICK
CZ_1_2_6_7_10_11
TICK
CZ_1_6_7_11
TICK
H_1_6_10_2_7_11_13_3_8
TICK
I[echo]_4_0_5_12
TICK
CZ_1_6_7_11
TICK
I[echo]_1_6_10_2_7_11_8_13
TICK
CZ_1_2_6_7_10_11
TICK
I[echo]_3
TICK
CZ_6_10_2_7_11_13_3_8
TICK
H_1_6_10_2_7_11_13_8
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_3_12
I[echo]_8
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
TICK
I[echo]_6_8
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_0_8_4
DT(4,4,1)rec[-6]
DT(3,5,1)rec[-5]
DT(5,5,1)rec[-4]
DT(3,3,1)rec[-3]
DT(4,6,1)rec[-2]
DT(3,7,1)rec[-1]
TICK
R_6_2_11_8_4_0
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_10_7_13_3
TICK
I[T_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
H_1_6_2_7_11_13_3_8
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_5_6_7_8_11_12
TICK
H_6_10_8_9
I[echo]_7_11
TICK
CZ_6_7_10_11_8_9
TICK
H_7_8_9
TICK
CZ_7_11_8_9
TICK
H_11_8
TICK
I[echo]_5_1_6_10_2_7_13_3_12_9
M_11_8
DT(3,7,2)rec[-2]_rec[-3]_rec[-4]_rec[-5]
DT(4,6,2)rec[-1]
TICK
R_11_8
TICK
H_11_8
TICK
CZ_7_11_8_9
TICK
H_7_8_9
TICK
CZ_6_7_10_11_8_9
TICK
H_6_10_8
I[echo]_7_11
TICK
CZ_5_6_7_8_11_12
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_1_6_2_7_11_13_3_8
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_6_10_2_7_11_13_8_3_9_12
TICK
I[T_dagger_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_8
DT(4,4,3)rec[-4]
DT(3,5,3)rec[-3]
DT(5,5,3)rec[-2]_rec[-6]
DT(4,6,3)rec[-1]
TICK
R_0_6_2_4_11_8
TICK
H_0_6_2_11_8_4
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
I[echo]_6_2_11
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_12
TICK
I[echo]_3_8
TICK
CZ_6_10_2_7_11_13_3_8
TICK
I[echo]_6_2_11
TICK
CZ_1_2_6_7_10_11
TICK
CZ_1_6_7_11
TICK
H_1_6_10_2_7_11_13_3_8
TICK
I[echo]_4_0_5_12
TICK
CZ_1_6_7_11
TICK
I[echo]_1_6_10_2_7_11_13_8
TICK
CZ_1_2_6_7_10_11
TICK
I[echo]_3
TICK
CZ_6_10_2_7_11_13_3_8
TICK
H_1_6_10_2_7_11_13_8
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_3_12
I[echo]_8
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
TICK
I[echo]_2
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_0_8_4
DT(4,4,4)rec[-6]
DT(5,5,4)rec[-5]_rec[-11]_rec[-16]_rec[-17]
DT(3,5,4)rec[-4]_rec[-17]
DT(3,3,4)rec[-3]
DT(4,6,4)rec[-2]
DT(3,7,4)rec[-1]_rec[-14]
TICK
R_6_2_11_8_4_0
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_7_13_3
TICK
I[T_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
H_1_6_2_7_11_13_3_8
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_5_6_7_8_11_12
TICK
H_6_10_8
I[echo]_7_11
TICK
CZ_6_7_10_11_8_9
TICK
H_7_8_9
TICK
CZ_7_11_8_9
TICK
H_11_8
TICK
I[echo]_5_1_6_10_2_7_13_3_12_9
M_11_8
DT(4,6,5)rec[-1]
OI(0)rec[-2]_rec[-3]_rec[-4]_rec[-5]_rec[-9]_rec[-10]_rec[-12]
TICK
R_11_8
TICK
H_11_8
TICK
CZ_7_11_8_9
TICK
H_7_8_9
TICK
CZ_6_7_10_11_8_9
TICK
H_6_10_8
I[echo]_7_11
TICK
CZ_5_6_7_8_11_12
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_1_6_2_7_11_13_3_8
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_6_10_2_7_11_13_8_3_9_12
TICK
I[T_dagger_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_8
DT(4,4,6)rec[-4]
DT(3,5,6)rec[-3]
DT(5,5,6)rec[-2]_rec[-6]
DT(4,6,6)rec[-1]
TICK
R_0_6_2_4_11_8
TICK
H_0_6_2_11_8_4
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
I[echo]_6_2_11
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_12
TICK
I[echo]_3_8
TICK
CZ_6_10_2_7_11_13_3_8
TICK
I[echo]_6_2_11
TICK
CZ_1_2_6_7_10_11
TICK
CZ_1_6_7_11
TICK
H_1_6_10_2_7_11_13_3_8
TICK
I[echo]_4_0_5_12
TICK
CZ_1_6_7_11
TICK
I[echo]_1_6_10_2_7_11_13_8
TICK
CZ_1_2_6_7_10_11
TICK
I[echo]_3
TICK
CZ_6_10_2_7_11_13_3_8
TICK
H_1_6_10_2_7_11_13_8
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_3_12
I[echo]_8
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
TICK
I[echo]_2
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_0_8_4
DT(4,4,7)rec[-6]
DT(5,5,7)rec[-5]_rec[-11]_rec[-16]_rec[-17]
DT(3,5,7)rec[-4]_rec[-17]
DT(3,3,7)rec[-3]
DT(4,6,7)rec[-2]
DT(3,7,7)rec[-1]_rec[-14]
TICK
R_6_2_11_8_4_0
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_7_13_3
TICK
I[T_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
H_1_6_2_7_11_13_3_8
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_5_6_7_8_11_12
TICK
H_6_10_8
I[echo]_7_11
TICK
CZ_6_7_10_11_8_9
TICK
H_7_8_9
TICK
CZ_7_11_8_9
TICK
H_11_8
TICK
I[echo]_5_1_6_10_2_7_13_3_12_9
M_11_8
DT(4,6,8)rec[-2]_rec[-3]_rec[-4]_rec[-5]_rec[-9]_rec[-10]_rec[-12]
DT(4,6,9)rec[-1]
TICK
R_11_8
TICK
H_11_8
TICK
CZ_7_11_8_9
TICK
H_7_8_9
TICK
CZ_6_7_10_11_8_9
TICK
H_6_10_8_9
I[echo]_7_11
TICK
CZ_5_6_7_8_11_12
TICK
H_5_7_8_12
I[echo]_6
TICK
CZ_1_6_2_7_11_13_3_8
TICK
H_1_6_2_7_11_13_3_8
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_6_10_2_7_11_13_8_3_9_12
TICK
I[T_dagger_gate]_5_1_10_7_13_3_12
TICK
I[conjugate]_5_1_10_7_13_3_12
TICK
I[echo]_5_1_10_7_13_3_12_9
M_6_2_11_8
DT(4,4,10)rec[-4]
DT(3,5,10)rec[-3]
DT(5,5,10)rec[-2]_rec[-6]
DT(4,6,10)rec[-1]
TICK
R_0_6_2_4_11_8
TICK
H_0_6_2_11_8_4
TICK
CZ_0_5_3_4_8_12
TICK
H_0_5_3_8_12_4
I[echo]_6_2_11
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_12
TICK
I[echo]_3_8
TICK
CZ_6_10_2_7_11_13_3_8
TICK
I[echo]_6_2_11
TICK
CZ_1_2_6_7_10_11
TICK
CZ_1_6_7_11
TICK
H_1_6_10_2_7_11_13_3_8
TICK
I[echo]_4_0_5_12
TICK
CZ_1_6_7_11
TICK
I[echo]_6_2_11_8
TICK
CZ_1_2_6_7_10_11
TICK
I[echo]_3
TICK
CZ_6_10_2_7_11_13_3_8
TICK
H_6_2_11_8
TICK
CZ_5_6_2_3_11_12
TICK
H_5_6_2_11_3_12
I[echo]_8
TICK
CZ_0_5_3_4_8_12
TICK
H_0_8_4
TICK
I[echo]_2_1_12_9
TICK
M_6_2_11_0_8_4_5_1_10_7_13_3_12_9
DT(4,4,11)rec[-14]
DT(5,5,11)rec[-13]_rec[-19]_rec[-24]_rec[-25]
DT(3,5,11)rec[-12]_rec[-25]
DT(3,3,11)rec[-11]
DT(4,6,11)rec[-10]
DT(3,7,11)rec[-9]_rec[-22]
DT(4,5,11)rec[-5]_rec[-6]_rec[-7]_rec[-8]
DT(5,6,11)rec[-2]_rec[-3]_rec[-5]_rec[-7]_rec[-10]
DT(6,5,11)rec[-2]_rec[-4]_rec[-5]_rec[-6]
DT(4,7,11)rec[-1]
)cult";

constexpr const char *kFig4GraftN2 = R"cult(Q(3,7)0
Q(3,8)1
Q(4,5)2
Q(4,6)3
Q(4,7)4
Q(4,8)5
Q(5,2)6
Q(5,3)7
Q(5,4)8
Q(5,5)9
Q(5,6)10
Q(5,7)11
Q(5,8)12
Q(5,9)13
Q(5,10)14
Q(6,2)15
Q(6,3)16
Q(6,4)17
Q(6,5)18
Q(6,6)19
Q(6,7)20
Q(6,8)21
Q(6,9)22
Q(6,10)23
Q(7,2)24
Q(7,3)25
Q(7,4)26
Q(7,5)27
Q(7,6)28
Q(7,7)29
Q(7,8)30
Q(7,9)31
Q(7,10)32
Q(7,11)33
Q(8,4)34
Q(8,5)35
Q(8,6)36
Q(8,7)37
Q(8,8)38
Q(8,9)39
Q(8,10)40
Q(8,11)41
Q(9,4)42
Q(9,5)43
Q(9,6)44
Q(9,7)45
Q(9,8)46
Q(9,9)47
Q(10,6)48
Q(10,7)49
Q(10,8)50
Q(10,9)51
Q(11,6)52
Q(11,7)53
H_YZ[conjugate]_10
TICK
S[injection]_10
TICK
H_8_2_9_3_4_11_20
H_YZ[conjugate]_10
TICK
I[injection]_10
TICK
CZ_2_3_9_10_4_11
TICK
H_9_18_4
TICK
CZ_9_18
TICK
H_18_10_19
I[echo]_9
TICK
CZ_2_9_18_19_3_10
TICK
H_9_19
TICK
I[echo]_18
TICK
CZ_9_18_10_19
TICK
H_19
I[echo]_9
TICK
CZ_8_9_19_20
TICK
H_9_18_3_19_28
TICK
I[echo]_10
TICK
CZ_2_9_18_19
TICK
I[echo]_28_3
TICK
CZ_9_10_3_4_19_28
TICK
H_3_28_20
I[echo]_9_18_19
TICK
CZ_2_3_9_18_10_19_11_20
TICK
H_2_9_18_19_11_20
I[echo]_3
TICK
CZ_8_9_3_10_19_28_4_11
TICK
H_9_3_10_19_11
TICK
I[echo]_9_19
TICK
I[echo]_8_10_28_12_2_18_4_20
M_9_3_11_19
DT(5,5,0)rec[-4]
DT(4,6,0)rec[-3]
DT(5,7,0)rec[-2]
DT(6,6,0)rec[-1]
TICK
R_9_3_19_11
TICK
I[conjugate]_8_2_18_10_28_4_20
TICK
I[echo]_8_2_18_10_28_4_12_20
TICK
I[T_gate]_8_2_18_10_28_4_20
TICK
I[conjugate]_8_2_18_10_28_4_20
TICK
H_2_9_3_10_19_28_4_11
TICK
CZ_2_9_3_10_19_28_4_11
TICK
H_8_10_11_20
I[echo]_9
TICK
CZ_8_9_10_11_19_20
TICK
H_9_18_11_12
I[echo]_10_19
TICK
CZ_9_10_18_19_11_12
TICK
H_10_11_12
TICK
CZ_10_19_11_12
TICK
H_19_11
TICK
I[echo]_8_3_10_28_12_2_9_18_4_20
M_19_11
DT(6,6,1)rec[-2]
DT(5,7,1)rec[-1]
TICK
R_19_11
TICK
H_19_11
TICK
CZ_10_19_11_12
TICK
H_10_11_12
TICK
CZ_9_10_18_19_11_12
TICK
H_9_18_11
I[echo]_10_19
TICK
CZ_8_9_10_11_19_20
TICK
H_8_10_11_20
I[echo]_9
TICK
CZ_2_9_3_10_19_28_4_11
TICK
H_2_9_3_10_19_28_4_11
TICK
I[conjugate]_8_2_18_10_28_4_20
TICK
I[echo]_8_2_9_18_3_10_19_28_11_4_12_20
TICK
I[T_dagger_gate]_8_2_18_10_28_4_20
TICK
I[conjugate]_8_2_18_10_28_4_20
TICK
I[echo]_8_10_28_2_18_4_20
M_9_3_19_11
DT(5,5,2)rec[-4]
DT(4,6,2)rec[-3]
DT(6,6,2)rec[-2]_rec[-6]
DT(5,7,2)rec[-1]
TICK
R_11_9_12_3_19
TICK
H_6_24_7_25_17_26_34_2_9_27_35_43_3_10_19_36_48_0_4_11_29_37_45_49_53_1_5_12_21_30_38_46_50_13_31_47_14_23_32_40_33
TICK
CZ_6_15_24_25_26_27_34_35_42_43_2_3_10_19_28_29_36_37_44_45_48_49_52_53_0_4_1_5_12_21_30_38_46_47_50_51_13_22_31_39_14_23_32_40_33_41
TICK
H_15_24_25_26_34_42_2_27_35_43_3_28_36_44_48_52_0_4_29_37_45_49_53_1_5_12_21_30_38_46_50_13_22_31_39_47_51_14_23_32_40_33_41
TICK
I[echo]_9_11
TICK
CZ_24_25_26_27_34_35_42_43_2_3_28_29_36_37_44_45_48_49_52_53_0_4_1_5_12_21_30_38_46_47_50_51_13_22_31_39_14_23_32_40_33_41
TICK
H_34_48_13_47_40
I[echo]_26_28_36_21_38_25_27_29
TICK
CZ_15_24_17_26_34_42_2_9_19_28_48_52_0_1_4_11_12_21_30_38_13_14_47_51_33_41
TICK
H_25_8_26_9_18_27_28_36_11_20_29_21_38
I[echo]_17_10_19_23_43_0_53_31_51_33_41
TICK
I[echo]_34_3_5_4_45_13_47
TICK
CZ_26_34_42_43_9_18_28_36_52_53_0_4_11_20_1_5_50_51_14_23_40_41
TICK
I[echo]_8_36_50_25_18
TICK
CZ_16_17_25_26_8_9_18_19_27_28_3_4_10_11_20_21_29_30_12_13
TICK
H_16_25_8_34_18_43_36_0_53_13_31_47_51_23_33_41
I[echo]_6_15_21_38_40_2_9_27_11_20_29
TICK
I[echo]_48_7
TICK
CZ_26_27_2_3_9_10_35_36_19_20_28_29_44_45_37_38_49_50_5_12_30_31_46_47_22_23_39_40_32_33
TICK
H_17_9_27_3_10_19_36_4_11_20_29_45_5_21_38_31_47_23_33
I[echo]_24_26_28_35_37_49_22_39
TICK
I[echo]_42_1_12_30_46_14_32_44_52
TICK
CZ_8_17_9_18_35_43_10_19_36_44_0_4_11_20_37_45_49_53_21_30_38_46_22_31_39_47_23_32
TICK
H_36_20_21_38_50_40
I[echo]_8_43
TICK
I[echo]_17_10_19_4_45_31
TICK
CZ_16_17_8_9_18_19_27_35_3_4_10_11_44_48_20_21_29_37_45_49_46_50_13_22_31_39_32_40
TICK
H_15_26_2_28_48_20_50_40
I[echo]_16_18
TICK
I[echo]_9_11
TICK
CZ_15_16_24_25_17_18_26_27_2_3_9_10_19_20_28_29_4_5
TICK
H_6_15_8_17_2_43_10_19_4_45_31
TICK
I[echo]_26_28_20
TICK
CZ_15_24_17_26_34_35_2_9_43_44_19_28_36_37_48_49_4_11_45_46_21_22_38_39_31_32
TICK
I[echo]_6_15_8_17_10_19
TICK
CZ_6_15_7_16_8_17_9_18_10_19_11_20
TICK
H_6_15_24_7_16_8_17_26_9_18_35_10_19_28_11_20_37_49_22_39
I[echo]_2_4
TICK
CZ_6_15_7_16_8_17_9_18_10_19_11_20
TICK
H_6_16_8_42_2_18_10_44_52_4_20_1_12_30_46_14_32
TICK
I[echo]_22_37_49_4_14_12_46_44_42_52_10_6_8
TICK
I[echo]_15_17_34_3_19_36_48_21_5_50_23_40_38_7_25_9_27_0_11_43_29_45_13_31_53_47_33
M_22_28_26_24_39_37_35_49_51_41_20_18_16_1_4_2_14_12_32_30_46_44_42_52_10_6_8
DT(6,9,3)rec[-27]
DT(7,6,3)rec[-26]
DT(8,9,3)rec[-23]
DT(10,9,3)rec[-19]
DT(8,11,3)rec[-18]
DT(5,7,3)rec[-17]_rec[-32]
DT(6,3,3)rec[-15]_rec[-16]
DT(6,3,4)rec[-15]
DT(4,7,3)rec[-13]
DT(4,5,3)rec[-12]
DT(9,6,3)rec[-6]
DT(9,4,3)rec[-5]
DT(11,6,3)rec[-4]
DT(5,6,3)rec[-3]
DT(5,2,3)rec[-2]
DT(5,4,3)rec[-1]
TICK
R_22_28_26_24_39_37_35_49_51_41_20_18_16_1_4_2_14_12_32_30_46_44_42_52_10_8_6
TICK
H_6_24_16_8_26_42_2_18_35_10_28_44_52_4_20_37_49_1_12_30_46_22_39_51_14_32_41
TICK
CZ_6_15_7_16_8_17_9_18_10_19_11_20
TICK
H_6_15_7_16_8_17_34_9_18_19_48_0_11_20_21_38_13
TICK
I[echo]_26_10_28
TICK
CZ_6_15_7_16_8_17_9_18_11_20
TICK
I[echo]_21_38_16_9_18_11_20_51_41
TICK
CZ_15_24_17_26_34_42_2_9_19_28_48_52_0_1_4_11_12_21_30_38_13_14_47_51_33_41
TICK
H_16_25_26_9_18_27_3_10_28_36_11_20_29_53_5_21_38
I[echo]_8_34_4_0_13
TICK
I[echo]_17_19
TICK
CZ_26_34_42_43_9_18_28_36_52_53_0_4_11_20_1_5_50_51_14_23_40_41
TICK
I[echo]_36_16_25_2_18_53
TICK
CZ_16_17_25_26_8_9_18_19_27_28_3_4_10_11_20_21_29_30_12_13
TICK
H_16_25_8_34_18_43_36_0_53_13_47_51_23_33_41
I[echo]_15_3_10_48_5_21_38_9_27_11_20_29
TICK
CZ_26_27_2_3_9_10_35_36_19_20_28_29_44_45_37_38_49_50_5_12_30_31_46_47_22_23_39_40_32_33
TICK
H_17_9_27_3_10_19_36_4_11_20_29_45_5_21_38_31_47_23
I[echo]_24_26_28_35_37_49_22_39
TICK
I[echo]_6_42_1_12_30_46_14_32_7_44_52
TICK
CZ_8_17_9_18_35_43_10_19_36_44_0_4_11_20_37_45_49_53_21_30_38_46_22_31_39_47_23_32
TICK
H_36_20_21_38_50_40
I[echo]_8_43
TICK
I[echo]_17_10_19_4_45_31
TICK
CZ_16_17_8_9_18_19_27_35_3_4_10_11_44_48_20_21_29_37_45_49_46_50_13_22_31_39_32_40
TICK
H_15_26_2_28_48_20
I[echo]_16_18
TICK
I[echo]_34_25_9_11_0_53_13
TICK
CZ_15_16_24_25_17_18_26_27_2_3_9_10_19_20_28_29_4_5
TICK
H_15_8_17_2_43_10_19_4_45_31
I[echo]_3_5_27_29_47
TICK
I[echo]_26_28_36_21_38_20
TICK
CZ_15_24_17_26_34_35_2_9_43_44_19_28_36_37_48_49_4_11_45_46_21_22_38_39_31_32
TICK
I[echo]_15_8_17_10_19_48
TICK
CZ_6_15_7_16_8_17_9_18_10_19_11_20
TICK
H_6_15_24_7_16_8_17_26_9_18_35_10_19_28_11_20_37_49_22_39
I[echo]_2_4
TICK
CZ_6_15_7_16_8_17_9_18_10_19_11_20
TICK
H_6_7_16_25_8_34_42_2_9_18_27_3_10_36_44_48_52_0_4_11_20_29_53_1_5_12_21_30_38_46_13_47_14_32
TICK
I[echo]_22_28_26_37_49_51_41_20_18_4_14_30_6_15_25_17_34_9_36_48_11_53_5_21_38_50_13_31_40
TICK
M_22_28_26_24_39_37_35_49_51_41_20_18_16_1_4_2_14_12_32_30_46_44_42_52_10_8_6_15_7_25_17_34_9_27_43_3_19_36_48_0_11_29_45_53_5_21_38_50_13_31_47_23_40_33
DT(6,9,5)rec[-54]_rec[-81]
DT(6,5,5)rec[-53]_rec[-70]_rec[-71]_rec[-80]
DT(7,4,5)rec[-52]_rec[-70]_rec[-79]
DT(6,3,5)rec[-51]_rec[-69]_rec[-78]
DT(8,11,5)rec[-50]_rec[-72]_rec[-77]
DT(8,7,5)rec[-49]_rec[-76]
DT(8,5,5)rec[-48]_rec[-75]
DT(10,7,5)rec[-47]_rec[-74]
DT(10,9,5)rec[-46]_rec[-73]
DT(8,11,6)rec[-45]_rec[-72]
DT(6,7,5)rec[-44]
DT(6,5,6)rec[-43]
DT(6,3,6)rec[-42]
DT(3,8,5)rec[-41]_rec[-68]
DT(5,6,5)rec[-40]_rec[-57]_rec[-66]_rec[-67]
DT(5,4,5)rec[-39]_rec[-55]_rec[-57]_rec[-67]
DT(5,10,5)rec[-38]_rec[-65]
DT(5,8,5)rec[-37]_rec[-64]_rec[-67]
DT(7,10,5)rec[-36]_rec[-63]
DT(7,8,5)rec[-35]_rec[-57]_rec[-62]
DT(9,8,5)rec[-34]_rec[-61]
DT(9,6,5)rec[-33]_rec[-60]
DT(9,4,5)rec[-32]_rec[-59]
DT(11,6,5)rec[-31]_rec[-58]
DT(5,6,6)rec[-30]_rec[-57]
DT(5,2,5)rec[-29]_rec[-56]
DT(5,2,6)rec[-28]
DT(6,2,5)rec[-27]
DT(7,5,5)rec[-21]_rec[-23]_rec[-25]_rec[-26]_rec[-28]
DT(9,5,5)rec[-20]_rec[-23]_rec[-32]
DT(6,6,5)rec[-18]_rec[-19]_rec[-22]_rec[-24]_rec[-29]_rec[-30]_rec[-40]
DT(5,7,5)rec[-14]_rec[-15]_rec[-18]_rec[-19]_rec[-30]_rec[-39]_rec[-40]
DT(7,7,5)rec[-13]_rec[-14]_rec[-17]_rec[-18]_rec[-21]_rec[-22]_rec[-29]_rec[-30]
DT(9,7,5)rec[-12]_rec[-16]_rec[-17]_rec[-20]_rec[-33]
DT(11,7,5)rec[-11]_rec[-16]_rec[-31]
DT(4,8,5)rec[-10]_rec[-15]_rec[-41]
DT(5,9,5)rec[-6]_rec[-9]_rec[-10]_rec[-37]_rec[-40]
DT(7,9,5)rec[-5]_rec[-8]_rec[-9]_rec[-13]_rec[-14]_rec[-30]_rec[-35]
DT(9,9,5)rec[-4]_rec[-7]_rec[-8]_rec[-12]_rec[-34]
DT(6,10,5)rec[-3]_rec[-6]_rec[-38]
DT(7,11,5)rec[-1]_rec[-2]_rec[-3]_rec[-5]_rec[-36]
OI(0)rec[-15]_rec[-19]_rec[-24]_rec[-25]_rec[-26]_rec[-29]_rec[-39]_rec[-57]_rec[-66]_rec[-82]_rec[-83]_rec[-85]
)cult";

constexpr const char *kGraftAdapt = R"cult(Q(0,2)0
Q(0,3)1
Q(0,4)2
Q(1,2)3
Q(1,3)4
Q(1,4)5
Q(2,2)6
Q(2,3)7
Q(2,4)8
Q(2,5)9
Q(2,6)10
Q(3,1)11
Q(3,2)12
Q(3,3)13
Q(3,4)14
Q(3,5)15
Q(3,6)16
Q(4,1)17
Q(4,2)18
Q(4,3)19
Q(4,4)20
Q(4,5)21
Q(4,6)22
Q(4,7)23
Q(4,8)24
Q(5,0)25
Q(5,1)26
Q(5,2)27
Q(5,3)28
Q(5,4)29
Q(5,5)30
Q(5,6)31
Q(5,7)32
Q(5,8)33
Q(6,0)34
Q(6,1)35
Q(6,2)36
Q(6,3)37
Q(6,4)38
Q(6,5)39
Q(6,6)40
Q(6,7)41
Q(7,2)42
Q(7,3)43
Q(7,4)44
Q(7,5)45
Q(7,6)46
Q(7,7)47
Q(8,2)48
Q(8,3)49
Q(8,4)50
Q(8,5)51
Q(9,4)52
Q(9,5)53
POLYGON(0,0,1,0.25)11_18_13_6
POLYGON(0,1,0,0.25)18_28_20_13
POLYGON(1,0,0,0.25)26_28_18_11
TICK
MPP_Z11*Z18*Z13*Z6
TICK
MPP_X11*X18*X13*X6
TICK
MPP_Z18*Z28*Z20*Z13
TICK
MPP_X18*X28*X20*X13
TICK
MPP_Z26*Z28*Z18*Z11
TICK
MPP_X26*X28*X18*X11
TICK
R_44_27_42_52_29_12_14_21_41_5_9_23_36_43_45_48_50_53_38_40_47_34_3
RX_51_37_17_25_35_49_19_39_7_31_1_16_33_46_0_8_15_22_10_2_24_32_30_4
MARKX(0)13_18_26_17_25_1_7_8_15
POLYGON(0,0,1,0.25)18_28_20_13
POLYGON(0,1,0,0.25)11_18_13_6
POLYGON(1,0,0,0.25)26_28_18_11
TICK
CX_35_34_25_26_49_48_43_42_53_52_37_36_45_44_17_11_19_18_39_38_20_29_46_40_30_21_47_41_8_14_15_9_31_22_32_23_16_10_33_24_51_50_2_5_0_1
TICK
CX_34_35_26_25_48_49_42_43_52_53_36_37_44_45_11_17_38_39_29_20_40_46_21_30_41_47_14_8_9_15_22_31_23_32_10_16_24_33_50_51_5_2
TICK
CX_34_25_26_27_11_12_48_42_36_37_19_20_7_8_1_2_38_39_10_9_24_23_46_47_52_53
TICK
CX_34_35_26_25_48_49_27_28_12_13_20_21_8_9_10_16_24_33_51_53_41_47
TICK
CX_26_17_36_42_27_18_12_6_37_28_19_13_7_4_38_29_20_14_8_5
TICK
CX_11_17_36_35_12_18_49_43_19_28_50_52_38_44_20_29_8_14_51_45_39_30_21_15_40_46_22_31_41_32
TICK
CX_25_26_18_19_6_7_28_27_13_12_50_49_44_43_38_37_46_45_40_39_31_30_22_21_16_15_33_32
TICK
CX_17_26_42_43_18_27_6_12_37_28_13_19_4_7_50_51_44_45_29_30_14_15_40_41_31_32_22_23
TICK
CX_35_26_17_11_18_12_28_19_13_7_4_1_29_20_14_8_5_2
TICK
CX_26_27_11_12_37_43_19_20_7_8_1_2_50_44_39_45_21_30_9_15_40_31_22_16_23_32
TICK
CX_28_27_19_18_13_12_7_6_4_3_1_0
TICK
CX_27_28_18_19_12_13_6_7_3_4_0_1
TICK
M_43_20_8_2_45_30_15_32_47_53_28_13_4
MX_34_26_11_48_36_50_38_40_22_10_24_18_0_6
DT(7,3,0)rec[-27]
DT(4,2,0)rec[-26]_rec[-31]
DT(7,5,0)rec[-23]
DT(7,7,0)rec[-19]
DT(9,5,0)rec[-18]
DT(5,1,0)rec[-17]_rec[-29]
DT(1,3,0)rec[-15]
DT(3,1,0)rec[-15]_rec[-16]_rec[-33]
DT(5,3,0)rec[-13]_rec[-28]
DT(3,3,0)rec[-12]_rec[-32]
DT(4,6,0)rec[-6]
DT(2,6,0)rec[-5]
DT(4,8,0)rec[-4]
DT(4,4,0)rec[-3]_rec[-30]
DT(0,2,0)rec[-2]
DT(2,2,0)rec[-1]
TICK
MPP_Z25*Z35*Z37*Z27*Z19*Z17_X3*X14*X9*X5_X49*X42_Z52*Z51_X39*X46*X41*X31_X33*X23
DT(5,0,1)rec[-6]
DT(0,2,1)rec[-5]_rec[-8]
DT(8,2,1)rec[-4]_rec[-17]
DT(9,5,1)rec[-3]_rec[-24]
DT(6,6,1)rec[-2]_rec[-13]
DT(4,8,1)rec[-1]_rec[-10]
TICK
MPP_X12*X19*X27*X29*X21*X14_Z5*Z3_X35*X25_Z44*Z51*Z46*Z39_Z31*Z41*Z33*Z23_X16*X9
DT(4,2,2)rec[-6]_rec[-15]
DT(1,3,2)rec[-5]_rec[-27]_rec[-36]
DT(6,0,2)rec[-4]_rec[-26]
DT(9,5,2)rec[-3]_rec[-30]_rec[-35]
DT(5,7,2)rec[-2]_rec[-32]
DT(2,6,2)rec[-1]_rec[-17]
TICK
MPP_X25*X27*X19*X17_Z12*Z14*Z7*Z3_X49*X52*X51*X44_X35*X42*X37_Z41*Z46_Z29*Z39*Z31*Z21
DT(4,2,3)rec[-6]_rec[-21]_rec[-30]_rec[-31]
DT(3,3,3)rec[-5]_rec[-34]_rec[-43]
DT(8,4,3)rec[-4]_rec[-27]
DT(6,2,3)rec[-3]_rec[-28]_rec[-31]
DT(7,7,3)rec[-2]_rec[-37]
DT(5,5,3)rec[-1]_rec[-40]
TICK
MPP_Z17*Z19*Z7*Z12_X27*X37*X44*X39*X29_Z14*Z21*Z16*Z9
DT(4,1,4)rec[-3]
DT(4,2,4)rec[-2]_rec[-24]_rec[-29]
DT(3,5,4)rec[-1]_rec[-42]
TICK
MPP_Z27*Z29*Z19*Z12_Z42*Z49*Z44*Z37_X21*X31*X23*X16
DT(3,3,5)rec[-3]_rec[-40]_rec[-41]_rec[-50]
DT(7,3,5)rec[-2]_rec[-51]
DT(4,6,5)rec[-1]_rec[-30]
TICK
MPP_X17*X19*X7*X12
DT(2,2,6)rec[-1]_rec[-26]_rec[-28]_rec[-38]
)cult";

constexpr const char *kGraftIdle = R"cult(Q(0,2)0
Q(0,3)1
Q(0,4)2
Q(1,2)3
Q(1,3)4
Q(1,4)5
Q(2,2)6
Q(2,3)7
Q(2,4)8
Q(2,5)9
Q(2,6)10
Q(3,1)11
Q(3,2)12
Q(3,3)13
Q(3,4)14
Q(3,5)15
Q(3,6)16
Q(4,1)17
Q(4,2)18
Q(4,3)19
Q(4,4)20
Q(4,5)21
Q(4,6)22
Q(4,7)23
Q(4,8)24
Q(5,0)25
Q(5,1)26
Q(5,2)27
Q(5,3)28
Q(5,4)29
Q(5,5)30
Q(5,6)31
Q(5,7)32
Q(5,8)33
Q(6,0)34
Q(6,1)35
Q(6,2)36
Q(6,3)37
Q(6,4)38
Q(6,5)39
Q(6,6)40
Q(6,7)41
Q(7,2)42
Q(7,3)43
Q(7,4)44
Q(7,5)45
Q(7,6)46
Q(7,7)47
Q(8,2)48
Q(8,3)49
Q(8,4)50
Q(8,5)51
Q(9,4)52
Q(9,5)53
POLYGON(0,0,1,0.25)12_29_21_14
POLYGON(0,0,1,0.25)12_29_21_14
POLYGON(0,0,1,0.25)12_29_21_14
POLYGON(0,0,1,0.25)27_29_19_12
POLYGON(0,0,1,0.25)27_29_19_12
POLYGON(0,0,1,0.25)27_29_19_12
POLYGON(0,0,1,0.25)3_14_9_5
POLYGON(0,0,1,0.25)3_5
POLYGON(0,0,1,0.25)46_41
POLYGON(0,0,1,0.25)52_51
POLYGON(0,1,0,0.25)12_29_21_14
POLYGON(0,1,0,0.25)17_19_7_12
POLYGON(0,1,0,0.25)17_19_7_12
POLYGON(0,1,0,0.25)17_19_7_12
POLYGON(0,1,0,0.25)27_37_44_39_29
POLYGON(0,1,0,0.25)3_14_9_5
POLYGON(0.25,0.25,0.25,0.5)35_25
POLYGON(0.25,0.25,0.25,0.5)49_42
POLYGON(0.25,0.25,0.25,0.5)42_37_35
POLYGON(0.25,0.25,0.25,0.5)52_51_44_49
POLYGON(0.25,0.25,0.25,0.5)46_41_31_39
POLYGON(0.25,0.25,0.25,0.5)31_23_16_21
POLYGON(0.625,0.625,0.625,0.5)49_44_37_42
POLYGON(0.625,0.625,0.625,0.5)51_46_39_44
POLYGON(0.625,0.625,0.625,0.5)39_31_21_29
POLYGON(0.625,0.625,0.625,0.5)21_16_9_14
POLYGON(0.625,0.625,0.625,0.5)41_33_23_31
POLYGON(1,0,0,0.25)25_27_19_17
POLYGON(1,0,0,0.25)25_27_19_17
POLYGON(1,0,0,0.25)25_27_19_17
POLYGON(1,0,0,0.25)12_29_21_14
POLYGON(1,0,0,0.25)25_35_37_27
POLYGON(1,0,0,0.25)12_14_7_3
POLYGON(1,0,0,0.25)3_14_9_5
POLYGON(1,0,0,0.25)16_9
POLYGON(1,0,0,0.25)33_23
TICK
MPP_X17*X19*X7*X12
TICK
MPP_X12*X19*X27*X29*X21*X14
TICK
MPP_X27*X37*X44*X39*X29_Z12*Z14*Z7*Z3
TICK
MPP_Z25*Z35*Z37*Z27*Z19*Z17
TICK
MPP_X25*X27*X19*X17
TICK
MPP_Z17*Z19*Z7*Z12
TICK
MPP_Z27*Z29*Z19*Z12
TICK
MPP_X25*X35_X42*X49_X23*X33_X16*X9_Z41*Z46_Z51*Z52_Z5*Z3_Z29*Z39*Z31*Z21
TICK
MPP_Z44*Z51*Z46*Z39_X21*X31*X23*X16_X35*X42*X37_X3*X14*X9*X5
TICK
MPP_Z14*Z21*Z16*Z9_Z31*Z41*Z33*Z23_Z42*Z49*Z44*Z37
TICK
MPP_X49*X52*X51*X44_X39*X46*X41*X31
TICK
R_43_20_8_2_45_30_15_32_47_53_28_13_4
RX_34_26_11_48_36_50_38_40_22_10_24_18_6_0
MARKZ(0)5_9_16_23_33
TICK
CX_18_19_27_28_12_13_6_7_3_4_0_1
TICK
CX_28_27_13_12_7_6_4_3_1_0
TICK
CX_34_25_26_27_11_12_48_42_36_37_19_20_7_8_1_2_38_39_10_9_24_23_46_47_52_53
TICK
CX_34_35_26_25_48_49_27_28_12_13_20_21_8_9_10_16_24_33_51_53_41_47
TICK
CX_26_17_36_42_27_18_12_6_37_28_19_13_7_4_38_29_20_14_8_5
TICK
CX_11_17_36_35_12_18_49_43_19_28_50_52_38_44_20_29_8_14_51_45_39_30_21_15_40_46_22_31_41_32
TICK
CX_25_26_18_19_6_7_28_27_13_12_50_49_44_43_38_37_46_45_40_39_31_30_22_21_16_15_33_32
TICK
CX_17_26_42_43_18_27_6_12_37_28_13_19_4_7_50_51_44_45_29_30_14_15_40_41_31_32_22_23
TICK
CX_35_26_17_11_18_12_28_19_13_7_4_1_29_20_14_8_5_2
TICK
CX_26_27_11_12_37_43_19_20_7_8_1_2_50_44_39_45_21_30_9_15_40_31_22_16_23_32
TICK
CX_28_27_19_18_13_12_7_6_4_3_1_0
TICK
CX_27_28_18_19_12_13_6_7_3_4_0_1
TICK
M_43_20_8_2_45_30_15_32_47_53_28_13_4
MX_34_26_11_48_36_50_38_40_22_10_24_18_6_0
DT(7,2,0)rec[-27]_rec[-30]
DT(5,2,0)rec[-26]_rec[-45]
DT(3,2,0)rec[-25]_rec[-49]
DT(1,4,0)rec[-24]_rec[-38]
DT(7,4,0)rec[-23]_rec[-36]
DT(5,4,0)rec[-22]_rec[-37]
DT(3,4,0)rec[-21]_rec[-32]
DT(5,6,0)rec[-20]_rec[-31]
DT(6,7,0)rec[-19]_rec[-40]
DT(8,5,0)rec[-18]_rec[-39]
DT(5,0,0)rec[-17]_rec[-48]
DT(4,1,0)rec[-16]_rec[-46]
DT(1,3,0)rec[-15]
DT(6,1,0)rec[-14]_rec[-44]
DT(4,3,0)rec[-13]_rec[-47]
DT(2,3,0)rec[-12]_rec[-52]
DT(8,3,0)rec[-11]_rec[-43]
DT(6,3,0)rec[-10]_rec[-34]
DT(9,4,0)rec[-9]_rec[-29]
DT(6,5,0)rec[-8]_rec[-50]
DT(7,6,0)rec[-7]_rec[-28]
DT(4,5,0)rec[-6]_rec[-35]
DT(3,6,0)rec[-5]_rec[-41]
DT(4,7,0)rec[-4]_rec[-42]
DT(4,2,0)rec[-3]_rec[-51]
DT(1,2,0)rec[-2]_rec[-33]
DT(0,2,0)rec[-1]
TICK
MPP_X27*X37*X44*X39*X29_Z17*Z19*Z7*Z12_X3*X14*X9*X5
DT(4,2,1)rec[-3]_rec[-6]_rec[-11]
DT(4,1,1)rec[-2]
DT(0,2,1)rec[-1]_rec[-4]
TICK
MPP_X25*X27*X19*X17_Z12*Z14*Z7*Z3
DT(4,2,2)rec[-2]_rec[-8]_rec[-17]_rec[-18]
DT(3,3,2)rec[-1]_rec[-21]_rec[-30]
TICK
MPP_Z25*Z35*Z37*Z27*Z19*Z17_Z5*Z3
DT(5,0,3)rec[-2]
DT(0,4,3)rec[-1]_rec[-31]
TICK
MPP_X12*X19*X27*X29*X21*X14
DT(2,2,4)rec[-1]_rec[-10]_rec[-11]
TICK
MPP_Z27*Z29*Z19*Z12
DT(3,3,5)rec[-1]_rec[-25]_rec[-26]_rec[-35]
TICK
MPP_X35*X25_X42*X49_X23*X33_X16*X9_Z52*Z51_Z46*Z41_Z29*Z39*Z31*Z21_X17*X19*X7*X12
DT(6,0,6)rec[-8]_rec[-31]
DT(8,2,6)rec[-7]_rec[-28]
DT(4,8,6)rec[-6]_rec[-21]
DT(2,6,6)rec[-5]_rec[-22]
DT(9,5,6)rec[-4]_rec[-35]
DT(7,7,6)rec[-3]_rec[-36]
DT(5,5,6)rec[-2]_rec[-39]
DT(2,2,6)rec[-1]_rec[-19]_rec[-20]_rec[-30]
TICK
MPP_X35*X42*X37_X49*X52*X51*X44_X39*X46*X41*X31_Z14*Z21*Z16*Z9
DT(6,2,7)rec[-4]_rec[-31]_rec[-34]
DT(8,4,7)rec[-3]_rec[-30]
DT(6,6,7)rec[-2]_rec[-28]
DT(3,5,7)rec[-1]_rec[-42]
TICK
MPP_Z42*Z49*Z44*Z37_X21*X31*X23*X16
DT(7,3,8)rec[-2]_rec[-50]
DT(4,6,8)rec[-1]_rec[-29]
TICK
MPP_Z44*Z51*Z46*Z39_Z31*Z41*Z33*Z23
DT(7,5,9)rec[-2]_rec[-48]
DT(5,7,9)rec[-1]_rec[-45]
)cult";

}  // namespace

std::string_view listing_text(Listing which) {
    switch (which) {
        case Listing::injection:
            return kInjection;
        case Listing::cultivation:
            return kCultivation;
        case Listing::fig2_cultivation:
            return kFig2Cultivation;
        case Listing::fig3_kickback:
            return kFig3Kickback;
        case Listing::fig4_graft_n2:
            return kFig4GraftN2;
        case Listing::graft_adapt:
            return kGraftAdapt;
        case Listing::graft_idle:
            return kGraftIdle;
    }
    return {};
}

}  // namespace cultsim
