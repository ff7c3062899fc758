macro_rules! example {
    ($name:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(souslin_schemes, "souslin_schemes.rs", souslin_schemes_example_runs);
example!(outer_measure, "outer_measure.rs", outer_measure_example_runs);
example!(stopping_times, "stopping_times.rs", stopping_times_example_runs);
example!(predictable_section, "predictable_section.rs", predictable_section_example_runs);
example!(optional_section, "optional_section.rs", optional_section_example_runs);
example!(measurable_section, "measurable_section.rs", measurable_section_example_runs);
example!(classify_time, "classify_time.rs", classify_time_example_runs);
