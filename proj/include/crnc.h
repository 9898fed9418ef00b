/* Copyright 2026 The crnc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the CRN compiler/verifier core. All functions are
 * string-in/string-out: inputs are NUL-terminated text in the formats the
 * tool defines (.crn networks, JSON function specs, "name=p/q" state lists);
 * outputs are heap strings the caller releases with crnc_string_free.
 *
 * Return codes double as process exit codes:
 *   0  success / property verified
 *   1  verification failure; a machine-readable counterexample is in the
 *      report output
 *   2  malformed input or failed validation (message in *err)
 *   3  internal invariant breach (message in *err)
 */

#ifndef CRNC_H
#define CRNC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef int crnc_status;

#define CRNC_OK 0
#define CRNC_VERIFY_FAIL 1
#define CRNC_INPUT_ERROR 2
#define CRNC_INTERNAL_ERROR 3

void crnc_string_free(char* s);

/* Compile a JSON function spec to a .crn network. Outputs the network text
 * and a JSON compile report (stage counts and the role -> species name map).
 * Either output pointer may be NULL if not wanted; same for err. */
crnc_status crnc_compile(const char* spec_json, int bimolecular, int prune,
                         int with_context, char** crn, char** report,
                         char** err);

/* Run the deterministic executor on a .crn network (context added to the
 * input state automatically); *value receives the exact rational output. */
crnc_status crnc_exec(const char* crn_text, const char* input_state,
                      char** value, char** err);

/* Static analysis report (JSON): output-obliviousness with offenders,
 * feedforward order, producible-species closure from inputs+context, and the
 * complementary never-producible (siphon) set. */
crnc_status crnc_check(const char* crn_text, char** report, char** err);

/* Concatenate two networks; wire is "UPSTREAM_OUT=DOWNSTREAM_IN" (the
 * upstream output name is checked). */
crnc_status crnc_compose(const char* upstream, const char* downstream,
                         const char* wire, char** crn, char** err);

/* Exact LP supremum of the output over everything reachable from the input
 * state; JSON report with value, attainability, and a witness trace when the
 * supremum is attained. */
crnc_status crnc_maxout(const char* crn_text, const char* input_state,
                        char** report, char** err);

/* End-to-end verification of a spec: validation (exact LP battery plus
 * `samples` sampled superadditivity pairs), then compile and check
 * oracle = gated-sum formula = executor = LP bound on sampled inputs; with
 * walk_steps > 0 also adversarial random walks completed by the executor,
 * and with mass_action != 0 an ODE cross-check. Returns CRNC_VERIFY_FAIL
 * with a counterexample in the JSON report when any check fails. */
crnc_status crnc_verify(const char* spec_json, unsigned samples,
                        unsigned long long seed, unsigned walk_steps,
                        int mass_action, char** report, char** err);

/* Mass-action ODE integration. rates_csv is a comma list of per-reaction
 * rate constants, or NULL/empty for all 1.0. Outputs a JSON summary (final
 * state, convergence flag) and optionally a CSV of trajectories. */
crnc_status crnc_simulate(const char* crn_text, const char* input_state,
                          const char* rates_csv, double t_end, double tol,
                          char** report, char** csv, char** err);

#ifdef __cplusplus
}
#endif

#endif /* CRNC_H */
