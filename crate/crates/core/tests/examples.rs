//! Runs every cargo example through its `run` entry point.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run().unwrap();
            }
        }
    };
}

example!(chacon_expand);
example!(readability);
example!(bratteli_towers);
example!(sadic_thue_morse);
example!(good_cover);
example!(factor_code);
example!(mef_odometer);
example!(gallery_distance);
