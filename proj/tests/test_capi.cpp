// Copyright 2026 The gqc Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "gqc/gqc.h"

namespace {

std::string tmp_path(const char *name) {
    return std::string(GQC_TEST_TMP) + "/" + name;
}

TEST(CApi, SolvePeakText) {
    int exact = 0;
    int64_t kappa = 0;
    char *text = nullptr;
    ASSERT_EQ(gqc_solve_peak(8, 5, 1, 1, 3, &exact, &kappa, &text), GQC_OK);
    EXPECT_EQ(exact, 1);
    std::string s(text);
    gqc_string_free(text);
    EXPECT_NE(s.find("s=3 eps=1"), std::string::npos) << s;
    EXPECT_NE(s.find("s=4 eps=3"), std::string::npos) << s;
}

TEST(CApi, ErrorsAreReported) {
    int out = 0;
    EXPECT_EQ(gqc_op_count(8, 0, &out), GQC_DOMAIN);
    EXPECT_NE(std::string(gqc_last_error()), "");
    EXPECT_EQ(gqc_op_count(8, 1, &out), GQC_OK);
    EXPECT_EQ(out, 42);
    EXPECT_EQ(std::string(gqc_last_error()), "");
    EXPECT_EQ(gqc_op_count(8, 1, nullptr), GQC_INVALID_ARGUMENT);
    EXPECT_STREQ(gqc_status_name(GQC_OK), "ok");
    EXPECT_NE(std::string(gqc_status_name(GQC_PARSE)), "");
}

TEST(CApi, CompileVerifyRoundTrip) {
    gqc_circuit *c = nullptr;
    ASSERT_EQ(gqc_circuit_parse("ROT l=2 a=1 b=0 part=S angle=0.3\nENT l=1 u=1 angle=0.2\n", 2, ".", &c), GQC_OK);
    size_t n = 0;
    ASSERT_EQ(gqc_circuit_size(c, &n), GQC_OK);
    EXPECT_EQ(n, 2u);
    gqc_gate_info info{};
    ASSERT_EQ(gqc_circuit_gate(c, 1, &info), GQC_OK);
    EXPECT_EQ(info.kind, GQC_GATE_ENTANGLE);
    EXPECT_EQ(gqc_circuit_gate(c, 2, &info), GQC_DOMAIN);

    gqc_program *p = nullptr;
    gqc_compile_options opts{1e-4, 0, 0, 0};
    ASSERT_EQ(gqc_compile(c, 6, 2, &opts, &p), GQC_OK);
    char *text = nullptr;
    ASSERT_EQ(gqc_program_format(p, &text), GQC_OK);
    gqc_program *q = nullptr;
    ASSERT_EQ(gqc_program_parse(text, &q), GQC_OK);
    gqc_string_free(text);
    size_t cost_p = 0, cost_q = 0, gates = 0;
    gqc_program_cost(p, &cost_p);
    gqc_program_cost(q, &cost_q);
    gqc_program_num_gates(q, &gates);
    EXPECT_EQ(cost_p, cost_q);
    EXPECT_EQ(gates, 2u);
    gqc_circuit *back = nullptr;
    ASSERT_EQ(gqc_program_circuit(q, ".", &back), GQC_OK);
    gqc_verify_report rep{};
    ASSERT_EQ(gqc_verify(q, back, 4, 9, 0, &rep), GQC_OK);
    EXPECT_GT(rep.min_fidelity, 1 - 1e-8);
    gqc_circuit_free(back);
    gqc_program_free(q);
    gqc_program_free(p);
    gqc_circuit_free(c);
}

TEST(CApi, ParseErrorStatus) {
    gqc_circuit *c = nullptr;
    EXPECT_EQ(gqc_circuit_parse("ROT l=1 nonsense\n", 2, ".", &c), GQC_PARSE);
    EXPECT_EQ(c, nullptr);
    EXPECT_NE(std::string(gqc_last_error()).find("line 1"), std::string::npos);
}

TEST(CApi, ReadoutOfBasisState) {
    std::string path = tmp_path("capi_state.txt");
    {
        std::ofstream f(path);
        // |2 0 2> on three qutrits: index 2*9 + 0*3 + 2 = 20.
        f << "# d=3 N=3 layout=single\n20 1 0\n";
    }
    gqc_state *s = nullptr;
    ASSERT_EQ(gqc_state_read(path.c_str(), &s), GQC_OK);
    int d = 0, n = 0, two = 1;
    gqc_state_shape(s, &d, &n, &two);
    EXPECT_EQ(d, 3);
    EXPECT_EQ(n, 3);
    EXPECT_EQ(two, 0);
    double dist[3];
    int64_t counts[3];
    ASSERT_EQ(gqc_readout(s, 1, 100, 5, dist, counts), GQC_OK);
    EXPECT_NEAR(dist[2], 1.0, 1e-10);
    EXPECT_EQ(counts[2], 100);
    std::string bin = tmp_path("capi_state.bin");
    ASSERT_EQ(gqc_state_write_binary(s, bin.c_str()), GQC_OK);
    gqc_state *t = nullptr;
    ASSERT_EQ(gqc_state_read(bin.c_str(), &t), GQC_OK);
    gqc_state_free(t);
    gqc_state_free(s);
    std::remove(path.c_str());
    std::remove(bin.c_str());
    EXPECT_EQ(gqc_state_read(tmp_path("missing.bin").c_str(), &t), GQC_IO);
}

TEST(CApi, CvAndWitness) {
    double e = 0;
    gqc_cv_options opts{10000, 0, 0};
    ASSERT_EQ(gqc_cv_error(3, 1.0, 1000, &opts, &e), GQC_OK);
    EXPECT_LT(e, 0.018);
    char *table = nullptr;
    ASSERT_EQ(gqc_cv_table(3, 4, &table), GQC_OK);
    gqc_string_free(table);
    gqc_witness w{};
    ASSERT_EQ(gqc_universality_witness(5, 0.5, &w), GQC_OK);
    EXPECT_GT(w.margin, 1e-9);
}

}  // namespace
