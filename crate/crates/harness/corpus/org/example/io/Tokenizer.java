package org.example.io;

public class Tokenizer {
    public List<String> tokenizeLines(String path) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> tokenizeKeys(String file) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(file));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> tokenizeConfig(String location) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(location));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> tokenizeHistory(String name) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(name));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> tokenizeManifest(String source) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(source));
            String line = reader.readLine();
            while (line != null) {
                line = reader.readLine();
                count++;
            }
            out.add(String.valueOf(count).trim());
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
}
